#include "okb/numdim.hpp"

#include <algorithm>

#include "okb/errors.hpp"
#include "okb/lp.hpp"
#include "okb/util.hpp"

namespace okb {

namespace {

Rat ratpow(const Rat& t, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= t;
  return r;
}

// Exact Linf distance from v to the nonempty polytope p.
Rat linf_distance(const Polytope& p, const RatVec& v) {
  const int n = p.ambient_dim();
  // Variables (x_1..x_n, s): minimize s with x in p and |x_i - v_i| <= s.
  LinProgram lp;
  lp.sense = Sense::Min;
  lp.objective = zero_vec(n + 1);
  lp.objective[n] = 1;
  for (const PolyIneq& row : p.all_ineqs()) {
    RatVec a = row.a;
    a.push_back(0);
    lp.constraints.push_back(LinConstraint{std::move(a), Rel::Ge, row.b});
  }
  for (int i = 0; i < n; ++i) {
    RatVec up = zero_vec(n + 1), down = zero_vec(n + 1);
    up[i] = -1;
    up[n] = 1;  //  s - x_i >= -v_i
    down[i] = 1;
    down[n] = 1;  //  s + x_i >= v_i
    lp.constraints.push_back(LinConstraint{std::move(up), Rel::Ge, -v[i]});
    lp.constraints.push_back(LinConstraint{std::move(down), Rel::Ge, v[i]});
  }
  LpResult r = lp_solve(lp);
  if (r.status != LpResult::Status::Optimal)
    throw Error("linf_distance: expected a bounded optimum");
  return r.value;
}

}  // namespace

Rat eval_poly(const VolPoly& p, const Rat& t) {
  Rat v = 0;
  for (std::size_t k = p.coeffs.size(); k-- > 0;) v = v * t + p.coeffs[k];
  return v;
}

Rat stable_t0(const GlobalBody& body, const RatVec& D, const RatVec& A) {
  if (!body.image_cone().contains(D))
    throw NotPseudoEffective("class " + vec_to_string(D) + " is outside the image cone");
  if (!body.image_cone().relint_contains(A))
    throw InputError("direction " + vec_to_string(A) +
                     " must lie in the interior of the image cone");
  Rat t = 1;
  Cone prev = minimal_cone(body.chamber_fan(), add(D, scaled(A, t)));
  for (int iter = 0; iter < 256; ++iter) {
    t /= 2;
    Cone cur = minimal_cone(body.chamber_fan(), add(D, scaled(A, t)));
    if (cur == prev && cur.contains(D)) return t;
    prev = std::move(cur);
  }
  throw Error("stable_t0: chamber did not stabilize");  // finitely many chambers: unreachable
}

VolPoly volume_polynomial(const GlobalBody& body, const RatVec& D, const RatVec& A) {
  const int n = body.valuation_dim();
  VolPoly out;
  out.t0 = stable_t0(body, D, A);
  // Degree <= n on one chamber, so n+1 nodes determine the polynomial.
  std::vector<Rat> nodes(n + 1);
  RatMat vand(n + 1, n + 1);
  RatVec vols(n + 1);
  for (int j = 0; j <= n; ++j) {
    nodes[j] = out.t0 / ratpow(Rat(2), j);
    for (int k = 0; k <= n; ++k) vand.at(j, k) = ratpow(nodes[j], k);
    vols[j] = volume(body.fiber(add(D, scaled(A, nodes[j]))));
  }
  LinearSolution sol = solve_linear(vand, vols);
  if (sol.kind != LinearSolution::Kind::Unique)
    throw Error("volume_polynomial: interpolation system is singular");
  out.coeffs = sol.particular;
  Rat held_t = out.t0 / ratpow(Rat(2), n + 1);
  VolPoly probe{out.coeffs, out.t0};
  if (eval_poly(probe, held_t) != volume(body.fiber(add(D, scaled(A, held_t)))))
    throw InterpolationError(
        "volume samples do not fit one polynomial; the chamber segment is too short");
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

int numerical_dimension(const GlobalBody& body, const RatVec& D, const RatVec& A) {
  VolPoly p = volume_polynomial(body, D, A);
  for (std::size_t k = 0; k < p.coeffs.size(); ++k)
    if (p.coeffs[k] != 0) return body.valuation_dim() - static_cast<int>(k);
  throw Error("numerical_dimension: volume polynomial is identically zero");
}

int body_dimension(const GlobalBody& body, const RatVec& D) {
  return body.fiber(D).dim();
}

RatVec pick_ample(const GlobalBody& body) {
  const Cone& image = body.image_cone();
  if (image.is_zero_cone()) throw Error("pick_ample: image cone is trivial");
  return image.relint_point();
}

InscribedSimplex inscribed_simplex(const Polytope& p) {
  if (p.is_empty()) throw InputError("inscribed_simplex: polytope is empty");
  const int n = p.ambient_dim();
  if (n == 0) return InscribedSimplex{0, {}};
  // Variables (tau_1..tau_n, eps): maximize eps subject to eps >= 0 and
  // tau + eps*w in p for w in {0, e_1, ..., e_n}, i.e. per inequality row
  // (a, b):  a . tau + eps (a . w) >= b.
  LinProgram lp;
  lp.sense = Sense::Max;
  lp.objective = zero_vec(n + 1);
  lp.objective[n] = 1;
  RatVec nonneg = zero_vec(n + 1);
  nonneg[n] = 1;
  lp.constraints.push_back(LinConstraint{std::move(nonneg), Rel::Ge, Rat(0)});
  for (const PolyIneq& row : p.all_ineqs()) {
    for (int w = 0; w <= n; ++w) {
      RatVec a = row.a;
      a.push_back(w == 0 ? Rat(0) : row.a[w - 1]);
      lp.constraints.push_back(LinConstraint{std::move(a), Rel::Ge, row.b});
    }
  }
  LpResult r = lp_solve(lp);
  if (r.status != LpResult::Status::Optimal)
    throw Error("inscribed_simplex: expected a bounded optimum");
  RatVec tau(r.witness.begin(), r.witness.begin() + n);
  return InscribedSimplex{r.value, std::move(tau)};
}

Rat inscribed_simplex_size(const Polytope& p) { return inscribed_simplex(p).eps; }

SandwichReport sandwich_check(const GlobalBody& body, const RatVec& D, const RatVec& A,
                              int k_max) {
  if (k_max < 1) throw InputError("sandwich_check: k_max must be >= 1");
  const int n = body.valuation_dim();
  SandwichReport rep;
  rep.t0 = stable_t0(body, D, A);
  InscribedSimplex simplex = inscribed_simplex(body.fiber(A));
  rep.eps = simplex.eps;
  rep.translate = simplex.translate;
  std::vector<RatVec> simplex_pts{simplex.translate};
  for (int i = 0; i < n; ++i) {
    RatVec p = simplex.translate;
    p[i] += simplex.eps;
    simplex_pts.push_back(std::move(p));
  }
  Polytope simplex_body = Polytope::from_points(n, simplex_pts);
  Polytope base = body.fiber(D);
  rep.inner_all_ok = true;
  rep.outer_bounded = true;
  for (int j = 1; j <= k_max; ++j) {
    SandwichSample s;
    s.t = rep.t0 / ratpow(Rat(2), j);
    Polytope grown = body.fiber(add(D, scaled(A, s.t)));
    // Inner: base + t*simplex sits inside grown (superadditivity of fibers
    // gives base + t*body(A) inside grown, and the simplex is in body(A)).
    Polytope inner = minkowski_sum(base, scale(simplex_body, s.t));
    s.inner_ok = true;
    for (const RatVec& v : inner.vertices())
      if (!grown.contains(v)) {
        s.inner_ok = false;
        break;
      }
    // Outer: one-sided Linf distance from grown back to base, per vertex.
    s.outer_dist = 0;
    for (const RatVec& v : grown.vertices())
      s.outer_dist = std::max(s.outer_dist, linf_distance(base, v));
    s.ratio = s.outer_dist / s.t;
    if (j == 1) rep.ratio_bound = 2 * s.ratio;
    rep.inner_all_ok = rep.inner_all_ok && s.inner_ok;
    rep.outer_bounded = rep.outer_bounded && (s.ratio <= rep.ratio_bound);
    rep.samples.push_back(std::move(s));
  }
  rep.ok = rep.inner_all_ok && rep.outer_bounded;
  return rep;
}

Rat rho_ratio(const GlobalBody& body, const RatVec& D, const RatVec& x) {
  const int n = body.valuation_dim();
  const int rho = body.class_dim();
  if (static_cast<int>(D.size()) != rho) throw InputError("rho_ratio: bad class dimension");
  if (is_zero(D)) throw InputError("rho_ratio: the reference class must be nonzero");
  if (static_cast<int>(x.size()) != n + rho) throw InputError("rho_ratio: bad point dimension");
  if (!body.image_cone().contains(D))
    throw NotPseudoEffective("class " + vec_to_string(D) + " is outside the image cone");
  if (!body.cone().contains(x))
    throw InputError("rho_ratio: point " + vec_to_string(x) + " is outside the global cone");

  // Denominator: Linf distance from class(x) to the ray through D.
  // Variables (lambda, s).
  RatVec cls(x.begin() + n, x.end());
  LinProgram den;
  den.sense = Sense::Min;
  den.objective = {Rat(0), Rat(1)};
  den.constraints.push_back(LinConstraint{{Rat(1), Rat(0)}, Rel::Ge, Rat(0)});  // lambda >= 0
  for (int i = 0; i < rho; ++i) {
    // |cls_i - lambda D_i| <= s
    den.constraints.push_back(LinConstraint{{-D[i], Rat(1)}, Rel::Ge, -cls[i]});
    den.constraints.push_back(LinConstraint{{D[i], Rat(1)}, Rel::Ge, cls[i]});
  }
  LpResult dr = lp_solve(den);
  if (dr.status != LpResult::Status::Optimal) throw Error("rho_ratio: denominator LP failed");
  if (dr.value == 0)
    throw InputError("rho_ratio: class of " + vec_to_string(x) +
                     " lies on the ray through the reference class");

  // Numerator: Linf distance from x to K = cone intersect {class = lambda D,
  // lambda >= 0}.  Variables (z_1..z_{n+rho}, lambda, s); K contains 0, so
  // the LP is always feasible.
  const int nz = n + rho;
  LinProgram num;
  num.sense = Sense::Min;
  num.objective = zero_vec(nz + 2);
  num.objective[nz + 1] = 1;
  for (const RatVec& a : body.cone().inequalities()) {
    RatVec row = a;
    row.push_back(0);
    row.push_back(0);
    num.constraints.push_back(LinConstraint{std::move(row), Rel::Ge, Rat(0)});
  }
  for (int i = 0; i < rho; ++i) {
    RatVec row = zero_vec(nz + 2);
    row[n + i] = 1;
    row[nz] = -D[i];
    num.constraints.push_back(LinConstraint{std::move(row), Rel::Eq, Rat(0)});
  }
  {
    RatVec row = zero_vec(nz + 2);
    row[nz] = 1;
    num.constraints.push_back(LinConstraint{std::move(row), Rel::Ge, Rat(0)});
  }
  for (int i = 0; i < nz; ++i) {
    RatVec up = zero_vec(nz + 2), down = zero_vec(nz + 2);
    up[i] = -1;
    up[nz + 1] = 1;
    num.constraints.push_back(LinConstraint{std::move(up), Rel::Ge, -x[i]});
    down[i] = 1;
    down[nz + 1] = 1;
    num.constraints.push_back(LinConstraint{std::move(down), Rel::Ge, x[i]});
  }
  LpResult nr = lp_solve(num);
  if (nr.status != LpResult::Status::Optimal) throw Error("rho_ratio: numerator LP failed");
  return nr.value / dr.value;
}

RhoReport rho_bound_estimate(const GlobalBody& body, const RatVec& D, int count,
                             std::uint64_t seed) {
  if (count < 1) throw InputError("rho_bound_estimate: sample count must be >= 1");
  const int n = body.valuation_dim();
  const int rho = body.class_dim();
  if (static_cast<int>(D.size()) != rho)
    throw InputError("rho_bound_estimate: bad class dimension");
  if (is_zero(D)) throw InputError("rho_bound_estimate: the reference class must be nonzero");
  if (!body.image_cone().contains(D))
    throw NotPseudoEffective("class " + vec_to_string(D) + " is outside the image cone");

  // The search needs points whose class leaves the ray through D; if every
  // generator's class is on the ray, no conic combination ever does.
  int pivot = 0;
  while (D[pivot] == 0) ++pivot;
  auto on_ray = [&](const RatVec& cls) {
    Rat lambda = cls[pivot] / D[pivot];
    if (lambda < 0) return false;
    for (int i = 0; i < rho; ++i)
      if (cls[i] != lambda * D[i]) return false;
    return true;
  };
  const std::vector<RatVec>& rays = body.cone().rays();
  bool any_off_ray = false;
  for (const RatVec& g : rays)
    if (!on_ray(RatVec(g.begin() + n, g.end()))) any_off_ray = true;
  if (!any_off_ray)
    throw InputError(
        "rho_bound_estimate: every class of the cone lies on the ray through the reference "
        "class, so the ratio is undefined");

  SplitMix64 rng(seed);
  RhoReport rep;
  rep.max_ratio = 0;
  rep.scale_invariant = true;
  int attempts = 0;
  const int max_attempts = 10000 + 100 * count;
  while (rep.samples < count) {
    if (++attempts > max_attempts)
      throw Error("rho_bound_estimate: sampling kept hitting the reference ray");
    RatVec x = zero_vec(n + rho);
    for (const RatVec& r : rays) {
      Rat c = Rat(static_cast<long>(rng.below(65))) / Rat(static_cast<long>(1 + rng.below(64)));
      x = add(x, scaled(r, c));
    }
    if (is_zero(x)) continue;
    if (on_ray(RatVec(x.begin() + n, x.end()))) continue;
    Rat ratio = rho_ratio(body, D, x);
    Rat doubled = rho_ratio(body, D, scaled(x, Rat(2)));
    rep.scale_invariant = rep.scale_invariant && (doubled == ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    ++rep.samples;
  }
  return rep;
}

}  // namespace okb
