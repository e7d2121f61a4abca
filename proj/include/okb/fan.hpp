#pragma once

#include <vector>

#include "okb/cone.hpp"
#include "okb/linalg.hpp"

namespace okb {

// Exact linear map Q^domain -> Q^codomain (matrix rows = codomain).
struct LinMap {
  RatMat m;

  RatVec operator()(const RatVec& v) const { return apply(m, v); }
  int domain() const { return m.cols; }
  int codomain() const { return m.rows; }

  static LinMap identity(int n);
  // (x_1..x_n | y_1..y_rho) -> (y_1..y_rho): projection onto the last block.
  static LinMap last_coords(int n, int rho);
};

// Finite collection of cones in canonical order.  The operations below
// (face_fan, close_fan, project_fan) all produce collections closed under
// taking faces and pairwise intersections; minimal_cone relies on that.
class Fan {
 public:
  Fan() = default;  // empty fan in ambient dimension 0
  Fan(int ambient, std::vector<Cone> cones);

  int ambient_dim() const { return ambient_; }
  const std::vector<Cone>& cones() const { return cones_; }
  std::size_t size() const { return cones_.size(); }
  bool has_cone(const Cone& c) const;

  bool operator==(const Fan& o) const { return ambient_ == o.ambient_ && cones_ == o.cones_; }
  bool operator!=(const Fan& o) const { return !(*this == o); }

 private:
  int ambient_ = 0;
  std::vector<Cone> cones_;  // sorted, deduplicated
};

// All faces of c as a fan (face lattices are closed under faces and
// intersections already).
Fan face_fan(const Cone& c);

// Smallest collection containing the input and closed under taking faces and
// pairwise intersections (a finite fixpoint).
Fan close_fan(int ambient, const std::vector<Cone>& cones);

// Image fan: close the images of all cones under f, then reduce each member
// to the minimal cone at one of its relative-interior points and re-close.
// The reduction discards images that merely cover several finer cones (they
// add nothing to any minimal-cone query) and is what makes chamber listings
// canonical.
Fan project_fan(const Fan& f, const LinMap& f_map);

// The intersection of all cones of f containing x; it is itself a cone of f
// and contains x in its relative interior.  Throws ContainmentError if x is
// outside the support of f.
Cone minimal_cone(const Fan& f, const RatVec& x);

}  // namespace okb
