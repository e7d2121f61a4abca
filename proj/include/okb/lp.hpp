#pragma once

#include <vector>

#include "okb/linalg.hpp"

namespace okb {

enum class Rel { Ge, Eq };
enum class Sense { Max, Min };

struct LinConstraint {
  RatVec a;
  Rel rel = Rel::Ge;
  Rat b = 0;  // constraint reads  a . x  (>= | ==)  b
};

struct LinProgram {
  Sense sense = Sense::Max;
  RatVec objective;  // its length fixes the variable count
  std::vector<LinConstraint> constraints;
};

struct LpResult {
  enum class Status { Optimal, Unbounded, Infeasible };
  Status status = Status::Infeasible;
  Rat value;      // objective value at the witness (Optimal only)
  RatVec witness; // an optimal point (Optimal only)
};

// Exact two-phase dense simplex over Q with Bland's anti-cycling rule.
// Variables are free (internally split x = u - w, u,w >= 0).  The optimal
// value is unique, hence independent of constraint order; the witness is the
// deterministic vertex Bland's rule reaches.
LpResult lp_solve(const LinProgram& p);

}  // namespace okb
