#pragma once

#include <cstdint>
#include <vector>

#include "okb/global_body.hpp"

namespace okb {

// Exact polynomial t -> vol(body(D + tA)) valid on a segment (0, t0] that
// stays inside one chamber.
struct VolPoly {
  std::vector<Rat> coeffs;  // coeffs[k] multiplies t^k; trailing zeros trimmed
  Rat t0;
};

Rat eval_poly(const VolPoly& p, const Rat& t);

// A t such that the whole open segment (0, t] lies in a single chamber:
// halve from 1 until the minimal chamber C of D + tA contains D itself —
// convexity then keeps D + sA in the relative interior of C for all
// 0 < s <= t, so the chamber cannot change on the segment.
Rat stable_t0(const GlobalBody& body, const RatVec& D, const RatVec& A);

// Interpolates the volume at t0/2^j, j = 0..n, re-checks the polynomial on
// a held-out node, and returns it.  A must lie in the interior of the image
// cone; D anywhere in the image cone.
VolPoly volume_polynomial(const GlobalBody& body, const RatVec& D, const RatVec& A);

// n minus the order of vanishing of the volume polynomial at t = 0.
// Independent of the choice of interior A.
int numerical_dimension(const GlobalBody& body, const RatVec& D, const RatVec& A);

// Dimension of the body over D; numerical_dimension is bounded below by it
// and expected to equal it.
int body_dimension(const GlobalBody& body, const RatVec& D);

// Canonical interior class: the sum of the image cone's primitive rays.
RatVec pick_ample(const GlobalBody& body);

// Largest axis-aligned simplex conv{tau, tau + eps e_1, ..., tau + eps e_n}
// inside a bounded polytope, found by one exact LP.  eps = 0 iff the
// polytope is lower-dimensional; empty input is rejected.
struct InscribedSimplex {
  Rat eps;
  RatVec translate;  // tau
};
InscribedSimplex inscribed_simplex(const Polytope& p);
Rat inscribed_simplex_size(const Polytope& p);

struct SandwichSample {
  Rat t;
  bool inner_ok = false;  // body(D) + t*simplex  is inside  body(D + tA)
  Rat outer_dist;         // max over vertices of body(D + tA) of Linf distance to body(D)
  Rat ratio;              // outer_dist / t
};

// Two-sided control of body(D + tA) against body(D) at t = t0/2^k,
// k = 1..k_max: an eps-simplex inscribed in body(A) certifies linear inner
// growth, and the outer distance must stay within twice the first sampled
// ratio (the ratio is nondecreasing in t, so later samples can only
// improve).
struct SandwichReport {
  Rat t0;
  Rat eps;
  RatVec translate;
  Rat ratio_bound;  // 2 * ratio of the first (largest-t) sample
  std::vector<SandwichSample> samples;
  bool inner_all_ok = false;
  bool outer_bounded = false;
  bool ok = false;  // both of the above
};
SandwichReport sandwich_check(const GlobalBody& body, const RatVec& D, const RatVec& A,
                              int k_max);

// ratio(x) = dist(x, K) / dist(class(x), ray(D)) for a point x of the
// global cone C, where K = C  intersect  {class on the ray through D} and
// both distances are exact Linf distances computed by LPs.  Undefined
// (InputError) when class(x) lies on the ray.
Rat rho_ratio(const GlobalBody& body, const RatVec& D, const RatVec& x);

// Seeded random search for the largest ratio over points of the global
// cone; also re-checks every accepted sample at 2x, where the exact ratio
// must be identical (both distances scale linearly).
struct RhoReport {
  Rat max_ratio;
  int samples = 0;
  bool scale_invariant = false;
};
RhoReport rho_bound_estimate(const GlobalBody& body, const RatVec& D, int count,
                             std::uint64_t seed);

}  // namespace okb
