#pragma once

#include <string>
#include <vector>

#include "okb/linalg.hpp"

namespace okb {

// Closed rational polyhedral cone held in a canonical double description, so
// structural equality coincides with geometric equality.
//
// Canonical form:
//  - lineality(): reduced-echelon basis of the lineality space,
//  - rays(): extreme rays of the pointed quotient, each represented by its
//    component orthogonal to the lineality space, primitive integer,
//    lex-sorted,
//  - equations(): reduced-echelon basis of span(C)-perp,
//  - ineqs(): facet normals represented inside span(C), primitive,
//    lex-sorted.
//
// Both constructors run the double-description conversion in each direction
// and canonicalize, so the same geometric cone always produces the same
// object no matter which side it was built from.
class Cone {
 public:
  Cone() = default;  // the zero cone in ambient dimension 0

  // Cone generated by `gens` (each nonzero; the empty list gives {0}).
  static Cone from_rays(int ambient, const std::vector<RatVec>& gens);
  // Cone {x : n.x >= 0 for every n}; zero normals are dropped, the empty
  // list gives all of Q^ambient.
  static Cone from_ineqs(int ambient, const std::vector<RatVec>& normals);

  int ambient_dim() const { return ambient_; }
  const std::vector<RatVec>& rays() const { return rays_; }
  const std::vector<RatVec>& lineality() const { return lin_; }
  const std::vector<RatVec>& ineqs() const { return ineqs_; }
  const std::vector<RatVec>& equations() const { return eqs_; }

  // Full V-description: rays, then +/- each lineality basis vector.
  std::vector<RatVec> generators() const;
  // Full H-description: ineqs, then +/- each equation.
  std::vector<RatVec> inequalities() const;

  int dim() const { return ambient_ - static_cast<int>(eqs_.size()); }
  int lineality_dim() const { return static_cast<int>(lin_.size()); }
  bool pointed() const { return lin_.empty(); }
  bool is_zero_cone() const { return rays_.empty() && lin_.empty(); }
  bool is_full_dim() const { return eqs_.empty(); }

  bool contains(const RatVec& x) const;
  // x in C with every facet inequality strict.
  bool relint_contains(const RatVec& x) const;
  // A canonical relative-interior point: the sum of the extreme rays.
  RatVec relint_point() const;

  bool operator==(const Cone& o) const;
  bool operator!=(const Cone& o) const { return !(*this == o); }
  // Deterministic total order used for canonical fan listings.
  bool operator<(const Cone& o) const;

  std::string key() const;  // canonical serialization

 private:
  Cone(int ambient, std::vector<RatVec> lin, std::vector<RatVec> rays, std::vector<RatVec> eqs,
       std::vector<RatVec> ineqs);
  int ambient_ = 0;
  std::vector<RatVec> lin_;
  std::vector<RatVec> rays_;
  std::vector<RatVec> eqs_;
  std::vector<RatVec> ineqs_;
};

// Facet-description of cone(rays); returns the full H-description.
std::vector<RatVec> rays_to_ineqs(int ambient, const std::vector<RatVec>& rays);
// Generator-description of {x : n.x >= 0}; returns the full V-description.
std::vector<RatVec> ineqs_to_rays(int ambient, const std::vector<RatVec>& normals);

Cone intersect(const Cone& a, const Cone& b);

// A face, named by the set of canonical inequality indices tight on it
// (maximal such set, sorted) together with its geometry.
struct ConeFace {
  std::vector<int> active;
  Cone geometry;
};

// All faces of c, including c itself and its minimal face (the lineality
// space).  Deterministic order: by active set size, then lexicographic.
std::vector<ConeFace> faces(const Cone& c);

// The unique face containing x in its relative interior.
ConeFace minimal_face(const Cone& c, const RatVec& x);

}  // namespace okb
