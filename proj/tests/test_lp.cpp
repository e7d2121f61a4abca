#include "doctest.h"

#include "okb/lp.hpp"
#include "okb/util.hpp"

using namespace okb;

namespace {

LinConstraint ge(RatVec a, Rat b) { return LinConstraint{std::move(a), Rel::Ge, std::move(b)}; }
LinConstraint eq(RatVec a, Rat b) { return LinConstraint{std::move(a), Rel::Eq, std::move(b)}; }

}  // namespace

TEST_CASE("known optimum on a box") {
  // max x + 2y on [0,1]^2 -> 3 at (1,1).
  LinProgram p;
  p.sense = Sense::Max;
  p.objective = {Rat(1), Rat(2)};
  p.constraints = {ge({Rat(1), Rat(0)}, 0), ge({Rat(-1), Rat(0)}, -1), ge({Rat(0), Rat(1)}, 0),
                   ge({Rat(0), Rat(-1)}, -1)};
  LpResult r = lp_solve(p);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == Rat(3));
  CHECK(r.witness == RatVec{Rat(1), Rat(1)});
}

TEST_CASE("fractional optimum stays exact") {
  // max y s.t. y <= x/3, y <= (1-x)/7: optimum at x = 3/10 (y = 1/10).
  LinProgram p;
  p.sense = Sense::Max;
  p.objective = {Rat(0), Rat(1)};
  p.constraints = {ge({Rat(1, 3), Rat(-1)}, 0), ge({Rat(-1, 7), Rat(-1)}, Rat(-1, 7))};
  LpResult r = lp_solve(p);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == Rat(1, 10));
  CHECK(r.witness[0] == Rat(3, 10));
}

TEST_CASE("infeasible and unbounded are detected") {
  LinProgram p;
  p.objective = {Rat(1)};
  p.constraints = {ge({Rat(1)}, 1), ge({Rat(-1)}, 0)};  // x >= 1 and x <= 0
  CHECK(lp_solve(p).status == LpResult::Status::Infeasible);

  LinProgram q;
  q.sense = Sense::Max;
  q.objective = {Rat(1)};
  q.constraints = {ge({Rat(1)}, 0)};
  CHECK(lp_solve(q).status == LpResult::Status::Unbounded);

  q.sense = Sense::Min;  // same data minimized is bounded at 0
  LpResult r = lp_solve(q);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == 0);
}

TEST_CASE("equality constraints bind") {
  // min x + y s.t. x + y == 2, x >= 0, y >= 0.
  LinProgram p;
  p.sense = Sense::Min;
  p.objective = {Rat(1), Rat(1)};
  p.constraints = {eq({Rat(1), Rat(1)}, 2), ge({Rat(1), Rat(0)}, 0), ge({Rat(0), Rat(1)}, 0)};
  LpResult r = lp_solve(p);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == 2);
  CHECK(dot({Rat(1), Rat(1)}, r.witness) == 2);
}

TEST_CASE("weak duality on seeded primal-dual pairs") {
  // Primal: max c.x s.t. A x <= b, x >= 0.  Dual: min b.y s.t. A^T y >= c,
  // y >= 0.  When both are feasible the exact optima must coincide.
  SplitMix64 rng(5);
  int optimal_pairs = 0;
  for (int iter = 0; iter < 60; ++iter) {
    int n = 1 + static_cast<int>(rng.below(3));  // variables
    int m = 1 + static_cast<int>(rng.below(3));  // constraints
    std::vector<RatVec> rows(m, RatVec(n));
    RatVec b(m), c(n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = Rat(static_cast<long long>(rng.below(9)) - 4);
    for (int i = 0; i < m; ++i) b[i] = Rat(static_cast<long long>(rng.below(9)));
    for (int j = 0; j < n; ++j) c[j] = Rat(static_cast<long long>(rng.below(9)) - 4);

    LinProgram primal;
    primal.sense = Sense::Max;
    primal.objective = c;
    for (int i = 0; i < m; ++i) primal.constraints.push_back(ge(scaled(rows[i], Rat(-1)), -b[i]));
    for (int j = 0; j < n; ++j) {
      RatVec e = zero_vec(n);
      e[j] = 1;
      primal.constraints.push_back(ge(e, 0));
    }

    LinProgram dual;
    dual.sense = Sense::Min;
    dual.objective = b;
    for (int j = 0; j < n; ++j) {
      RatVec col(m);
      for (int i = 0; i < m; ++i) col[i] = rows[i][j];
      dual.constraints.push_back(ge(col, c[j]));
    }
    for (int i = 0; i < m; ++i) {
      RatVec e = zero_vec(m);
      e[i] = 1;
      dual.constraints.push_back(ge(e, 0));
    }

    LpResult rp = lp_solve(primal);
    LpResult rd = lp_solve(dual);
    if (rp.status == LpResult::Status::Optimal && rd.status == LpResult::Status::Optimal) {
      CHECK(rp.value == rd.value);  // strong duality, exactly
      ++optimal_pairs;
    } else if (rp.status == LpResult::Status::Unbounded) {
      CHECK(rd.status == LpResult::Status::Infeasible);
    } else if (rd.status == LpResult::Status::Unbounded) {
      CHECK(rp.status == LpResult::Status::Infeasible);
    }
  }
  CHECK(optimal_pairs > 15);
}

TEST_CASE("witness always satisfies every constraint") {
  SplitMix64 rng(29);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 1 + static_cast<int>(rng.below(4));
    LinProgram p;
    p.sense = (rng.below(2) == 0) ? Sense::Max : Sense::Min;
    p.objective = RatVec(n);
    for (int j = 0; j < n; ++j) p.objective[j] = Rat(static_cast<long long>(rng.below(7)) - 3);
    int m = 1 + static_cast<int>(rng.below(6));
    for (int i = 0; i < m; ++i) {
      RatVec a(n);
      for (int j = 0; j < n; ++j) a[j] = Rat(static_cast<long long>(rng.below(7)) - 3);
      p.constraints.push_back(ge(std::move(a), Rat(static_cast<long long>(rng.below(5)) - 2)));
    }
    LpResult r = lp_solve(p);
    if (r.status != LpResult::Status::Optimal) continue;
    for (const LinConstraint& c : p.constraints) {
      if (c.rel == Rel::Ge) CHECK(dot(c.a, r.witness) >= c.b);
      else CHECK(dot(c.a, r.witness) == c.b);
    }
    CHECK(dot(p.objective, r.witness) == r.value);
  }
}
