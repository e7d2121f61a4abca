#pragma once

#include <string>
#include <vector>

#include "okb/cone.hpp"
#include "okb/fan.hpp"
#include "okb/polytope.hpp"

namespace okb {

// One basis element: a primitive chamber-fan ray together with the body
// sitting over it.
struct BasisEntry {
  RatVec ray;
  Polytope body;
};

// Minkowski basis: one entry per ray of the chamber fan, listed in fan
// order, plus the fan itself (decompose walks its chambers).
struct MinkBasis {
  std::vector<BasisEntry> entries;
  Fan chamber_fan;
};

struct WeightedRay {
  int index = 0;  // into MinkBasis::entries
  Rat weight;     // > 0
};
using Decomposition = std::vector<WeightedRay>;

struct DecompReport {
  bool ok = false;
  std::string reason;  // nonempty when verification failed
  Decomposition weights;
  Polytope lhs;  // body of the class
  Polytope rhs;  // weighted Minkowski sum of basis bodies
};

struct PairReport {
  // Both classes lie in the minimal chamber of the combination.
  bool hypothesis_met = false;
  // body(a d1 + b d2) == a body(d1) + b body(d2), checked exactly.
  bool ok = false;
  Polytope lhs;
  Polytope rhs;
};

// A global body: a pointed full-dimensional rational cone in
// Q^(valuation_dim + class_dim) whose slices over the last class_dim
// coordinates ("fibers") are bounded polytopes in the valuation block.
//
// Construction validates the cone (see validate_cone) and then computes the
// derived data eagerly: the image cone (projection to the class block), the
// chamber fan (projection of the face fan, a polyhedral subdivision of the
// image cone on which fibers vary linearly), and the Minkowski basis (the
// fibers over the chamber-fan rays).
class GlobalBody {
 public:
  GlobalBody(int valuation_dim, int class_dim, Cone cone);

  int valuation_dim() const { return n_; }
  int class_dim() const { return rho_; }
  const Cone& cone() const { return cone_; }
  const Cone& image_cone() const { return image_; }
  const Fan& chamber_fan() const { return basis_.chamber_fan; }
  const MinkBasis& basis() const { return basis_; }

  // Checks dimensions, pointedness, full dimensionality and fiber
  // boundedness, in that order; throws ValidationError with a witness in
  // the detail string.  Does not compute chambers, so it is cheap enough
  // for generate-and-retry loops.
  static void validate_cone(int valuation_dim, int class_dim, const Cone& c);

  // The fiber polytope over the class D.  Throws NotPseudoEffective when D
  // is outside the image cone (the fiber would be empty).
  Polytope fiber(const RatVec& D) const;

  // Writes D as a positive combination of chamber-fan rays by recursive
  // splitting inside its minimal chamber; the result is sorted by basis
  // index and each weight is positive.  depth_out (optional) receives the
  // recursion depth, which is at most class_dim - 1.  Throws
  // BasisLookupError if a chamber ray is missing from the basis.
  Decomposition decompose(const RatVec& D, int* depth_out = nullptr) const;
  Decomposition decompose(const MinkBasis& basis, const RatVec& D, int* depth_out = nullptr) const;

  // Decomposes D and checks, exactly, that the weighted Minkowski sum of
  // the basis bodies equals the body over D.
  DecompReport verify_decomposition(const RatVec& D) const;
  DecompReport verify_decomposition(const MinkBasis& basis, const RatVec& D) const;

  // Checks body(a d1 + b d2) == a body(d1) + b body(d2) exactly and reports
  // whether the chamber hypothesis (d1, d2 both in the minimal chamber of
  // the combination) holds.  Additivity is guaranteed under the hypothesis
  // and typically fails across walls.  Requires a, b >= 0.
  PairReport check_pair_additivity(const RatVec& d1, const RatVec& d2, const Rat& a,
                                   const Rat& b) const;

 private:
  int n_ = 0;
  int rho_ = 0;
  Cone cone_;
  Cone image_;
  MinkBasis basis_;
};

}  // namespace okb
