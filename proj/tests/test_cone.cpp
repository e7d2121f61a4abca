#include "doctest.h"

#include <set>
#include <string>

#include "okb/cone.hpp"
#include "okb/errors.hpp"
#include "okb/lp.hpp"
#include "okb/util.hpp"

using namespace okb;

namespace {

RatVec rv(std::initializer_list<long long> xs) {
  RatVec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

// Independent membership oracle: x lies in cone(gens) iff the LP
//   find lambda >= 0 with sum lambda_i g_i = x
// is feasible.  Exercises a completely different code path (simplex) than
// Cone::contains (facet inequalities from the conversion).
bool in_conic_hull(const std::vector<RatVec>& gens, const RatVec& x) {
  if (gens.empty()) return is_zero(x);
  int k = static_cast<int>(gens.size());
  int dim = static_cast<int>(x.size());
  LinProgram p;
  p.sense = Sense::Min;
  p.objective = zero_vec(k);
  for (int d = 0; d < dim; ++d) {
    RatVec row(k);
    for (int i = 0; i < k; ++i) row[i] = gens[i][d];
    p.constraints.push_back({row, Rel::Eq, x[d]});
  }
  for (int i = 0; i < k; ++i) {
    RatVec e = zero_vec(k);
    e[i] = 1;
    p.constraints.push_back({e, Rel::Ge, Rat(0)});
  }
  return lp_solve(p).status == LpResult::Status::Optimal;
}

RatVec rand_int_vec(SplitMix64& rng, int dim, int lo, int hi) {
  RatVec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Rat(lo + static_cast<long long>(rng.below(hi - lo + 1)));
  return v;
}

}  // namespace

TEST_CASE("canonical form of the positive quadrant") {
  Cone c = Cone::from_rays(2, {rv({2, 0}), rv({0, 3}), rv({1, 1})});
  CHECK(c.rays() == std::vector<RatVec>{rv({0, 1}), rv({1, 0})});  // redundant ray dropped
  CHECK(c.ineqs().size() == 2);
  CHECK(c.equations().empty());
  CHECK(c.lineality().empty());
  CHECK(c.dim() == 2);
  CHECK(c.pointed());
  CHECK(c == Cone::from_ineqs(2, {rv({1, 0}), rv({0, 1})}));
}

TEST_CASE("lineality is split off") {
  Cone c = Cone::from_rays(2, {rv({1, 0}), rv({-1, 0}), rv({0, 1})});
  CHECK(c.lineality().size() == 1);
  CHECK(c.rays().size() == 1);
  CHECK_FALSE(c.pointed());
  CHECK(c.contains(rv({-5, 0})));
  CHECK_FALSE(c.contains(rv({0, -1})));
}

TEST_CASE("lower-dimensional cone gets equations") {
  Cone c = Cone::from_rays(3, {rv({1, 1, 0}), rv({1, 2, 0})});
  CHECK(c.dim() == 2);
  CHECK(c.equations() == std::vector<RatVec>{rv({0, 0, 1})});
  CHECK(c.contains(rv({2, 3, 0})));
  CHECK_FALSE(c.contains(rv({2, 3, 1})));
}

TEST_CASE("zero cone and full space") {
  Cone z = Cone::from_rays(2, {});
  CHECK(z.is_zero_cone());
  CHECK(z.dim() == 0);
  CHECK(z.contains(zero_vec(2)));
  Cone full = Cone::from_ineqs(2, {});
  CHECK(full.dim() == 2);
  CHECK(full.lineality_dim() == 2);
  CHECK(full.contains(rv({-7, 13})));
}

TEST_CASE("relint point and relint_contains") {
  Cone c = Cone::from_rays(2, {rv({1, 0}), rv({1, 1})});
  RatVec p = c.relint_point();
  CHECK(c.relint_contains(p));
  CHECK_FALSE(c.relint_contains(rv({1, 0})));  // on a facet
  CHECK_FALSE(c.relint_contains(rv({0, 0})));
}

TEST_CASE("double description round trip on seeded cones") {
  SplitMix64 rng(101);
  for (int iter = 0; iter < 200; ++iter) {
    int dim = 1 + static_cast<int>(rng.below(5));
    int count = 1 + static_cast<int>(rng.below(7));
    std::vector<RatVec> gens;
    for (int i = 0; i < count; ++i) {
      RatVec g = rand_int_vec(rng, dim, -3, 3);
      if (!is_zero(g)) gens.push_back(std::move(g));
    }
    Cone c = Cone::from_rays(dim, gens);
    // V -> H -> V: rebuilding from each side must reproduce the object.
    CHECK(Cone::from_ineqs(dim, c.inequalities()) == c);
    CHECK(Cone::from_rays(dim, c.generators()) == c);
    // Every generator used must still be inside; its negation only if the
    // cone says so via the H-side.
    for (const RatVec& g : gens) CHECK(c.contains(g));
  }
}

TEST_CASE("containment agrees with the LP conic-hull oracle") {
  SplitMix64 rng(202);
  int inside = 0, outside = 0;
  for (int iter = 0; iter < 60; ++iter) {
    int dim = 2 + static_cast<int>(rng.below(3));
    std::vector<RatVec> gens;
    int count = 2 + static_cast<int>(rng.below(5));
    for (int i = 0; i < count; ++i) {
      RatVec g = rand_int_vec(rng, dim, -3, 3);
      if (!is_zero(g)) gens.push_back(std::move(g));
    }
    Cone c = Cone::from_rays(dim, gens);
    for (int probe = 0; probe < 6; ++probe) {
      RatVec x = rand_int_vec(rng, dim, -4, 4);
      bool lp = in_conic_hull(gens, x);
      CHECK(c.contains(x) == lp);
      (lp ? inside : outside)++;
    }
  }
  CHECK(inside > 30);  // the comparison saw both outcomes
  CHECK(outside > 30);
}

TEST_CASE("intersection is the set intersection") {
  Cone a = Cone::from_rays(2, {rv({1, 0}), rv({1, 1})});
  Cone b = Cone::from_rays(2, {rv({1, 1}), rv({0, 1})});
  Cone x = intersect(a, b);
  CHECK(x.rays() == std::vector<RatVec>{rv({1, 1})});
  SplitMix64 rng(303);
  for (int iter = 0; iter < 120; ++iter) {
    RatVec p = rand_int_vec(rng, 2, -3, 3);
    CHECK(x.contains(p) == (a.contains(p) && b.contains(p)));
  }
}

TEST_CASE("face lattice of the quadrant") {
  Cone c = Cone::from_rays(2, {rv({1, 0}), rv({0, 1})});
  auto fs = faces(c);
  REQUIRE(fs.size() == 4);  // cone, two rays, origin
  std::multiset<int> dims;
  for (const ConeFace& f : fs) dims.insert(f.geometry.dim());
  CHECK(dims == std::multiset<int>{0, 1, 1, 2});
  for (const ConeFace& f : fs) {
    // Faces are exactly the tight sets: each named inequality vanishes on
    // the face and the rest stay valid.
    for (int idx : f.active)
      for (const RatVec& r : f.geometry.generators()) CHECK(dot(c.ineqs()[idx], r) == 0);
  }
}

TEST_CASE("faces of seeded cones are closed under intersection") {
  SplitMix64 rng(404);
  for (int iter = 0; iter < 25; ++iter) {
    int dim = 2 + static_cast<int>(rng.below(2));
    std::vector<RatVec> gens;
    int count = 3 + static_cast<int>(rng.below(3));
    for (int i = 0; i < count; ++i) {
      RatVec g = rand_int_vec(rng, dim, 0, 3);  // nonnegative: pointed
      if (!is_zero(g)) gens.push_back(std::move(g));
    }
    Cone c = Cone::from_rays(dim, gens);
    auto fs = faces(c);
    std::set<std::string> keys;
    for (const ConeFace& f : fs) keys.insert(f.geometry.key());
    CHECK(keys.size() == fs.size());  // no duplicate faces
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        Cone meet = intersect(fs[i].geometry, fs[j].geometry);
        CHECK(keys.count(meet.key()) == 1);
      }
  }
}

TEST_CASE("minimal_face matches relative-interior membership") {
  Cone c = Cone::from_rays(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  ConeFace f = minimal_face(c, rv({1, 2, 0}));
  CHECK(f.geometry.dim() == 2);
  CHECK(f.geometry.relint_contains(rv({1, 2, 0})));
  CHECK(minimal_face(c, rv({0, 0, 0})).geometry.is_zero_cone());
  CHECK(minimal_face(c, rv({1, 1, 1})).geometry == c);
  CHECK_THROWS_AS(minimal_face(c, rv({-1, 0, 0})), ContainmentError);
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(Cone::from_rays(2, {rv({1, 0, 0})}), InputError);  // wrong length
  CHECK_THROWS_AS(Cone::from_rays(2, {rv({0, 0})}), InputError);     // zero generator
  CHECK_THROWS_AS(Cone::from_rays(-1, {}), InputError);
}
