#pragma once

#include <string>
#include <vector>

#include "okb/linalg.hpp"

namespace okb {

// One affine inequality  a . x >= b.
struct PolyIneq {
  RatVec a;
  Rat b;
  bool operator==(const PolyIneq& o) const { return a == o.a && b == o.b; }
};

// Bounded rational polytope (possibly empty, possibly lower-dimensional),
// held in canonical double description via homogenization at x0 = 1.
//
// Canonical form: lex-sorted vertex list (which alone decides equality),
// plus the facet inequalities and the affine-hull equations derived from the
// canonical homogeneous cone.  The same point set always yields the same
// object, whichever constructor produced it.
class Polytope {
 public:
  Polytope() = default;  // the empty polytope in ambient dimension 0

  static Polytope empty(int ambient);
  // Convex hull of the given points.
  static Polytope from_points(int ambient, const std::vector<RatVec>& pts);
  // Bounded solution set of the inequalities; throws InputError if the set
  // is unbounded, returns the empty polytope if it is infeasible.
  static Polytope from_ineqs(int ambient, const std::vector<PolyIneq>& ineqs);

  int ambient_dim() const { return ambient_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<PolyIneq>& facets() const { return facets_; }
  const std::vector<PolyIneq>& equations() const { return eqs_; }
  // Facets plus both directions of each equation: a full H-description.
  std::vector<PolyIneq> all_ineqs() const;

  bool is_empty() const { return vertices_.empty(); }
  int dim() const;  // -1 for the empty polytope
  bool contains(const RatVec& x) const;

  bool operator==(const Polytope& o) const {
    return ambient_ == o.ambient_ && vertices_ == o.vertices_;
  }
  bool operator!=(const Polytope& o) const { return !(*this == o); }

  std::string key() const;  // canonical serialization (vertex list)

 private:
  int ambient_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<PolyIneq> facets_;
  std::vector<PolyIneq> eqs_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
// alpha >= 0 required; scale(p, 0) is the origin point (or empty if p is).
Polytope scale(const Polytope& p, const Rat& alpha);
Polytope translate(const Polytope& p, const RatVec& t);

// Euclidean (Lebesgue) volume; 0 whenever dim(p) < ambient dimension.
// Computed exactly by a pulling triangulation from the first canonical
// vertex: vol(simplex) = |det| / d!.  Note: conventions that measure a
// polytope by the growth rate of its dilates' lattice sections differ from
// this one by a fixed factor of d!; orders of vanishing and degrees computed
// from either normalization agree.
Rat volume(const Polytope& p);

struct PolyFace {
  std::vector<int> active;  // facet indices tight on the face (maximal set)
  Polytope geometry;
};

// All nonempty faces, the polytope itself included.
std::vector<PolyFace> faces(const Polytope& p);
// The face containing x in its relative interior.
PolyFace minimal_face(const Polytope& p, const RatVec& x);

}  // namespace okb
