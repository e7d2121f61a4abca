#include "okb/global_body.hpp"

#include <algorithm>
#include <map>

#include "okb/errors.hpp"
#include "okb/lp.hpp"

namespace okb {

void GlobalBody::validate_cone(int valuation_dim, int class_dim, const Cone& c) {
  using R = ValidationError::Reason;
  if (valuation_dim < 1 || class_dim < 1)
    throw ValidationError(R::Malformed, "valuation_dim and class_dim must be at least 1");
  const int ambient = valuation_dim + class_dim;
  if (c.ambient_dim() != ambient)
    throw ValidationError(R::Malformed, "cone lives in dimension " +
                                            std::to_string(c.ambient_dim()) + ", expected " +
                                            std::to_string(ambient));
  if (!c.pointed())
    throw ValidationError(R::NotPointed,
                          "contains the line through " + vec_to_string(c.lineality()[0]));
  if (!c.is_full_dim())
    throw ValidationError(R::NotFullDim, "cone spans only " + std::to_string(c.dim()) + " of " +
                                             std::to_string(ambient) + " dimensions");
  // Fibers are bounded iff the cone meets {class block = 0} only at 0:
  // that intersection is the common recession cone of every fiber.
  std::vector<RatVec> zero_class;
  for (int i = 0; i < class_dim; ++i) {
    RatVec e = zero_vec(ambient);
    e[valuation_dim + i] = 1;
    zero_class.push_back(e);
    e[valuation_dim + i] = -1;
    zero_class.push_back(e);
  }
  Cone recession = intersect(c, Cone::from_ineqs(ambient, zero_class));
  if (!recession.is_zero_cone())
    throw ValidationError(R::UnboundedFiber, "fibers recede along " +
                                                 vec_to_string(recession.generators().front()));
}

GlobalBody::GlobalBody(int valuation_dim, int class_dim, Cone cone)
    : n_(valuation_dim), rho_(class_dim), cone_(std::move(cone)) {
  validate_cone(n_, rho_, cone_);

  std::vector<RatVec> image_gens;
  for (const RatVec& g : cone_.generators()) {
    RatVec cls(g.begin() + n_, g.end());
    if (!is_zero(cls)) image_gens.push_back(std::move(cls));
  }
  image_ = Cone::from_rays(rho_, image_gens);

  basis_.chamber_fan = project_fan(face_fan(cone_), LinMap::last_coords(n_, rho_));
  for (const Cone& c : basis_.chamber_fan.cones()) {
    if (c.dim() != 1) continue;
    const RatVec& r = c.rays()[0];
    basis_.entries.push_back(BasisEntry{r, fiber(r)});
  }
}

Polytope GlobalBody::fiber(const RatVec& D) const {
  if (static_cast<int>(D.size()) != rho_)
    throw InputError("fiber: class vector has dimension " + std::to_string(D.size()) +
                     ", expected " + std::to_string(rho_));
  if (!image_.contains(D))
    throw NotPseudoEffective("class " + vec_to_string(D) + " is outside the image cone");
  // The fiber is { x : a_val . x >= -a_cls . D } over the cone's facet rows
  // a = (a_val | a_cls); it is bounded because validation pinned the
  // recession cone, and nonempty because D is in the image.
  std::vector<PolyIneq> rows;
  for (const RatVec& a : cone_.inequalities()) {
    RatVec a_val(a.begin(), a.begin() + n_);
    Rat b = 0;
    for (int i = 0; i < rho_; ++i) b -= a[n_ + i] * D[i];
    rows.push_back(PolyIneq{std::move(a_val), std::move(b)});
  }
  return Polytope::from_ineqs(n_, rows);
}

namespace {

int basis_index(const MinkBasis& basis, const RatVec& ray) {
  for (std::size_t i = 0; i < basis.entries.size(); ++i)
    if (basis.entries[i].ray == ray) return static_cast<int>(i);
  throw BasisLookupError("no basis entry for chamber ray " + vec_to_string(ray));
}

// Largest t with D + t v inside C (v is never a recession direction of C
// here, so the LP is bounded; t = 0 is feasible because D is in C).
Rat exit_time(const Cone& c, const RatVec& D, const RatVec& v) {
  LinProgram p;
  p.sense = Sense::Max;
  p.objective = {Rat(1)};
  for (const RatVec& a : c.inequalities())
    p.constraints.push_back(LinConstraint{{dot(a, v)}, Rel::Ge, -dot(a, D)});
  LpResult r = lp_solve(p);
  if (r.status != LpResult::Status::Optimal) throw Error("exit_time: expected a bounded optimum");
  return r.value;
}

// Recursive chamber splitting.  D (with accumulated weight w) sits in the
// relative interior of its minimal chamber C.  If C is a ray, read off the
// multiple.  Otherwise move along the difference of C's first two extreme
// rays until the boundary is hit on either side; D is a convex combination
// of the two exit points, each of which lies on a proper face, so the
// chamber dimension drops every level and the recursion depth is bounded by
// the class dimension.
void decompose_rec(const MinkBasis& basis, const RatVec& D, const Rat& w, int depth,
                   std::map<int, Rat>& acc, int& max_depth) {
  max_depth = std::max(max_depth, depth);
  if (is_zero(D)) return;
  Cone c = minimal_cone(basis.chamber_fan, D);
  if (c.dim() == 1) {
    const RatVec& r = c.rays()[0];
    std::size_t j = 0;
    while (j < r.size() && r[j] == 0) ++j;
    Rat lambda = D[j] / r[j];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (D[i] != lambda * r[i]) throw Error("decompose: class is not a multiple of its ray");
    acc[basis_index(basis, r)] += w * lambda;
    return;
  }
  const std::vector<RatVec>& rays = c.rays();
  RatVec v = sub(rays[0], rays[1]);
  Rat t_plus = exit_time(c, D, v);
  Rat t_minus = exit_time(c, D, scaled(v, Rat(-1)));
  if (t_plus <= 0 || t_minus <= 0) throw Error("decompose: expected strict interior exit times");
  RatVec d_plus = add(D, scaled(v, t_plus));
  RatVec d_minus = sub(D, scaled(v, t_minus));
  Rat total = t_plus + t_minus;
  decompose_rec(basis, d_plus, w * t_minus / total, depth + 1, acc, max_depth);
  decompose_rec(basis, d_minus, w * t_plus / total, depth + 1, acc, max_depth);
}

}  // namespace

Decomposition GlobalBody::decompose(const RatVec& D, int* depth_out) const {
  return decompose(basis_, D, depth_out);
}

Decomposition GlobalBody::decompose(const MinkBasis& basis, const RatVec& D,
                                    int* depth_out) const {
  if (static_cast<int>(D.size()) != rho_)
    throw InputError("decompose: class vector has dimension " + std::to_string(D.size()) +
                     ", expected " + std::to_string(rho_));
  if (!image_.contains(D))
    throw NotPseudoEffective("class " + vec_to_string(D) + " is outside the image cone");
  std::map<int, Rat> acc;
  int max_depth = 0;
  decompose_rec(basis, D, Rat(1), 0, acc, max_depth);
  if (depth_out) *depth_out = max_depth;
  Decomposition out;
  for (const auto& [index, weight] : acc)
    if (weight != 0) out.push_back(WeightedRay{index, weight});
  return out;
}

DecompReport GlobalBody::verify_decomposition(const RatVec& D) const {
  return verify_decomposition(basis_, D);
}

DecompReport GlobalBody::verify_decomposition(const MinkBasis& basis, const RatVec& D) const {
  DecompReport rep;
  rep.lhs = fiber(D);
  try {
    rep.weights = decompose(basis, D);
  } catch (const BasisLookupError& e) {
    rep.reason = e.what();
    return rep;
  }
  Polytope rhs = Polytope::from_points(n_, {zero_vec(n_)});
  for (const WeightedRay& wr : rep.weights)
    rhs = minkowski_sum(rhs, scale(basis.entries[wr.index].body, wr.weight));
  rep.rhs = std::move(rhs);
  rep.ok = (rep.lhs == rep.rhs);
  if (!rep.ok) rep.reason = "weighted Minkowski sum differs from the body";
  return rep;
}

PairReport GlobalBody::check_pair_additivity(const RatVec& d1, const RatVec& d2, const Rat& a,
                                             const Rat& b) const {
  if (a < 0 || b < 0) throw InputError("check_pair_additivity: coefficients must be >= 0");
  Polytope p1 = fiber(d1);
  Polytope p2 = fiber(d2);
  RatVec comb = add(scaled(d1, a), scaled(d2, b));
  PairReport rep;
  Cone chamber = minimal_cone(basis_.chamber_fan, comb);
  rep.hypothesis_met = chamber.contains(d1) && chamber.contains(d2);
  rep.lhs = fiber(comb);
  rep.rhs = minkowski_sum(scale(p1, a), scale(p2, b));
  rep.ok = (rep.lhs == rep.rhs);
  return rep;
}

}  // namespace okb
