// Acceptance gate: nine end-to-end checks, one visible PASS/FAIL line each.
// Exit status 0 only when every check passes.  All tolerances and sample
// counts are pinned here as named constants.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "okb/errors.hpp"
#include "okb/fan.hpp"
#include "okb/instance.hpp"
#include "okb/lp.hpp"
#include "okb/numdim.hpp"
#include "okb/suite.hpp"
#include "okb/util.hpp"

using namespace okb;

namespace {

// Pinned parameters.
constexpr int kClassesPerInstance = 100;   // stratified classes per instance (minimum)
constexpr int kPairsPerInstance = 50;      // additivity pairs per instance
constexpr std::uint64_t kSeed = 42;        // master seed for every seeded check
constexpr int kSandwichDepth = 4;          // sandwich samples at t0/2, ..., t0/16
constexpr int kRatioSamples = 1000;        // random search size for the distance ratio
constexpr int kRoundTripCones = 1000;      // double-description round trips
constexpr int kMcPolytopes = 20;           // Monte Carlo volume cross-checks
constexpr int kMcPoints = 100000;          // sample points per polytope
constexpr double kMcRelTol = 0.05;         // allowed relative volume error
// A candidate polytope must fill at least this fraction of its bounding box,
// so the Monte Carlo estimate has sampling error well below the tolerance.
const Rat kMcMinBoxFraction = Rat(1, 20);

int g_failed = 0;

void line(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", idx, name, detail.c_str());
  if (!ok) ++g_failed;
}

template <typename F>
void criterion(int idx, const char* name, F&& f) {
  try {
    std::pair<bool, std::string> r = f();
    line(idx, name, r.first, r.second);
  } catch (const std::exception& e) {
    line(idx, name, false, std::string("unexpected exception: ") + e.what());
  }
}

RatVec rv(std::initializer_list<long long> xs) {
  RatVec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

// The full instance battery: the three committed fixtures plus a seeded grid
// covering every (valuation_dim, class_dim) cell up to 3 x 3, up to 10 rays
// and coefficients up to 8.
std::vector<InstanceData> battery() {
  std::vector<InstanceData> v;
  v.push_back(generate_instance("interval", GenParams{}, 0));
  v.push_back(generate_instance("twochamber", GenParams{}, 0));
  GenParams sp;
  sp.n = 2;
  sp.scale = 1;
  v.push_back(generate_instance("simplex_product", sp, 0));
  struct G {
    int n, rho, k, M;
    std::uint64_t s;
  };
  static const G grid[] = {
      {1, 1, 3, 8, 11},  {1, 1, 4, 5, 12},  {2, 1, 4, 8, 21},  {1, 2, 4, 8, 22},
      {2, 1, 5, 6, 23},  {1, 2, 5, 6, 24},  {2, 2, 5, 8, 31},  {2, 2, 6, 8, 32},
      {2, 2, 6, 5, 33},  {3, 1, 5, 8, 41},  {1, 3, 5, 8, 42},  {3, 1, 6, 6, 43},
      {1, 3, 6, 6, 44},  {3, 2, 6, 8, 51},  {2, 3, 6, 8, 52},  {3, 2, 7, 6, 53},
      {2, 3, 7, 6, 54},  {3, 3, 6, 8, 61},  {3, 3, 7, 6, 62},  {3, 3, 8, 5, 63},
      {3, 3, 8, 8, 64},  {3, 3, 10, 8, 65},
  };
  for (const G& g : grid) {
    GenParams p;
    p.n = g.n;
    p.rho = g.rho;
    p.ray_count = g.k;
    p.max_coeff = g.M;
    v.push_back(generate_instance("random", p, g.s));
  }
  return v;
}

std::vector<InstanceData> fixtures() {
  std::vector<InstanceData> all = battery();
  return {all[0], all[1], all[2]};
}

const BasisEntry* find_entry(const MinkBasis& b, const RatVec& ray) {
  for (const BasisEntry& e : b.entries)
    if (e.ray == ray) return &e;
  return nullptr;
}

Polytope segment(long long lo, long long hi) {
  return Polytope::from_points(1, {RatVec{Rat(lo)}, RatVec{Rat(hi)}});
}

// Independent bound for the two-chamber fiber: optimize v over the
// hand-written inequality system v >= 0, a + b - v >= 0, 2a - v >= 0 with
// the class (a, b) fixed, using only the LP solver.
Rat two_chamber_extreme(const Rat& a, const Rat& b, Sense sense) {
  LinProgram p;
  p.sense = sense;
  p.objective = {Rat(1)};
  p.constraints.push_back(LinConstraint{{Rat(1)}, Rel::Ge, Rat(0)});
  p.constraints.push_back(LinConstraint{{Rat(-1)}, Rel::Ge, -(a + b)});
  p.constraints.push_back(LinConstraint{{Rat(-1)}, Rel::Ge, -(Rat(2) * a)});
  LpResult r = lp_solve(p);
  if (r.status != LpResult::Status::Optimal) throw Error("oracle LP did not solve");
  return r.value;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace

int main() {
  std::vector<InstanceData> insts = battery();

  // One suite run feeds checks 1 (decompositions), 4 (pair additivity) and
  // 5 (dimension equality); it rebuilds each instance from its data.
  SuiteReport suite;
  bool suite_ran = false;
  std::string suite_err;
  try {
    SuiteOptions opts;
    opts.samples_per_instance = kClassesPerInstance;
    opts.pairs_per_instance = kPairsPerInstance;
    opts.seed = kSeed;
    opts.jobs = 1;
    suite = run_suite(insts, opts);
    suite_ran = true;
  } catch (const std::exception& e) {
    suite_err = e.what();
  }

  criterion(1, "minkowski decomposition on the instance battery", [&] {
    if (!suite_ran) return std::make_pair(false, "suite failed to run: " + suite_err);
    int random_count = 0, classes = 0;
    bool ok = suite.instances.size() == insts.size();
    for (const InstanceReport& ir : suite.instances) {
      if (ir.name.rfind("random_", 0) == 0) ++random_count;
      classes += ir.classes_sampled;
      ok = ok && ir.classes_sampled >= kClassesPerInstance;
      ok = ok && ir.decomposition_fail == 0 && ir.decomposition_pass == ir.classes_sampled;
    }
    ok = ok && random_count >= 20;
    return std::make_pair(
        ok, std::to_string(suite.instances.size()) + " instances (" +
                std::to_string(random_count) + " random), " + std::to_string(classes) +
                " stratified classes, every weighted Minkowski sum equals its fiber exactly");
  });

  criterion(2, "two-chamber golden basis and fiber oracle", [&] {
    GlobalBody body = build_body(generate_instance("twochamber", GenParams{}, 0));
    const MinkBasis& basis = body.basis();
    bool ok = basis.entries.size() == 3;
    const BasisEntry* e10 = find_entry(basis, rv({1, 0}));
    const BasisEntry* e11 = find_entry(basis, rv({1, 1}));
    const BasisEntry* e01 = find_entry(basis, rv({0, 1}));
    ok = ok && e10 && e10->body == segment(0, 1);
    ok = ok && e11 && e11->body == segment(0, 2);
    ok = ok && e01 && e01->body == Polytope::from_points(1, {RatVec{Rat(0)}});
    // Twenty integer classes, fiber vs the independent LP bound and the
    // closed form [0, min(a+b, 2a)].
    static const long long cls[20][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3},
                                         {2, 3}, {3, 2}, {4, 1}, {5, 2}, {2, 2}, {4, 3}, {5, 5},
                                         {6, 1}, {1, 6}, {7, 3}, {8, 5}, {3, 8}, {9, 4}};
    int agreed = 0;
    for (const auto& c : cls) {
      Rat a(c[0]), b(c[1]);
      Rat lo = two_chamber_extreme(a, b, Sense::Min);
      Rat hi = two_chamber_extreme(a, b, Sense::Max);
      Rat sum = a + b, twice = 2 * a;
      Rat closed = std::min(sum, twice);
      Polytope fib = body.fiber(RatVec{a, b});
      if (lo == 0 && hi == closed &&
          fib == Polytope::from_points(1, {RatVec{lo}, RatVec{hi}}))
        ++agreed;
    }
    ok = ok && agreed == 20;
    return std::make_pair(ok, "basis {(1,0),(1,1),(0,1)} -> {[0,1],[0,2],{0}} and " +
                                  std::to_string(agreed) +
                                  "/20 fibers equal the independent LP interval exactly");
  });

  criterion(3, "chamber fans are finite, closed and exactly representable", [&] {
    std::size_t total_cones = 0;
    int fans_ok = 0;
    for (const InstanceData& d : insts) {
      GlobalBody body = build_body(d);
      const Fan& fan = body.chamber_fan();
      bool ok = fan.ambient_dim() == body.class_dim() && fan.size() > 0;
      for (const Cone& c : fan.cones()) {
        // Structural double-description round trip: generators and facet
        // normals describe the same cone, both directions.
        ok = ok && Cone::from_rays(fan.ambient_dim(), c.generators()) == c;
        ok = ok && Cone::from_ineqs(fan.ambient_dim(), c.inequalities()) == c;
      }
      // Re-closing under faces and pairwise intersections changes nothing.
      ok = ok && close_fan(fan.ambient_dim(), fan.cones()) == fan;
      total_cones += fan.size();
      if (ok) ++fans_ok;
    }
    return std::make_pair(fans_ok == static_cast<int>(insts.size()),
                          std::to_string(fans_ok) + "/" + std::to_string(insts.size()) +
                              " fans (" + std::to_string(total_cones) +
                              " cones) re-close to themselves with exact round trips");
  });

  criterion(4, "pair additivity inside chambers, failure across the wall", [&] {
    if (!suite_ran) return std::make_pair(false, "suite failed to run: " + suite_err);
    int pairs = 0;
    bool ok = true;
    for (const InstanceReport& ir : suite.instances) {
      pairs += ir.pair_pass;
      ok = ok && ir.pair_fail == 0 && ir.pair_pass == kPairsPerInstance;
    }
    // Cross-wall fixture: bodies over (1,0) and (0,1) are [0,1] and {0};
    // their sum [0,1] differs from the body [0,2] over (1,1).
    GlobalBody body = build_body(generate_instance("twochamber", GenParams{}, 0));
    PairReport pr = body.check_pair_additivity(rv({1, 0}), rv({0, 1}), Rat(1), Rat(1));
    ok = ok && !pr.hypothesis_met && !pr.ok;
    ok = ok && pr.lhs == segment(0, 2) && pr.rhs == segment(0, 1);
    return std::make_pair(ok, std::to_string(pairs) +
                                  " in-chamber pairs exactly additive; cross-wall fixture "
                                  "gives [0,2] vs [0,1] as required");
  });

  criterion(5, "numerical dimension equals fiber dimension on every class", [&] {
    if (!suite_ran) return std::make_pair(false, "suite failed to run: " + suite_err);
    int classes = 0;
    bool ok = true;
    for (const InstanceReport& ir : suite.instances) {
      classes += ir.dimension_pass;
      ok = ok && ir.dimension_fail == 0 && ir.dimension_pass == ir.classes_sampled;
    }
    return std::make_pair(
        ok, std::to_string(classes) +
                " classes (all extreme rays and wall generators included): the one-sided "
                "bound dim(fiber) <= nu is asserted first, then exact equality");
  });

  criterion(6, "volume sandwich control on the fixtures", [&] {
    int checks = 0;
    bool ok = true;
    for (const InstanceData& d : fixtures()) {
      GlobalBody body = build_body(d);
      RatVec ample = pick_ample(body);
      std::vector<RatVec> classes;
      for (const Cone& c : body.chamber_fan().cones()) {
        if (c.dim() == 1) classes.push_back(c.rays()[0]);
        if (c.dim() == body.image_cone().dim()) classes.push_back(c.relint_point());
      }
      for (const RatVec& D : classes) {
        SandwichReport rep = sandwich_check(body, D, ample, kSandwichDepth);
        ok = ok && rep.ok && rep.eps > 0 &&
             static_cast<int>(rep.samples.size()) == kSandwichDepth;
        for (const SandwichSample& s : rep.samples) ok = ok && s.ratio <= rep.ratio_bound;
        ++checks;
      }
    }
    return std::make_pair(
        ok, std::to_string(checks) +
                " classes sandwiched at t0/2..t0/16: inscribed-simplex growth inside, "
                "outer distance within twice the largest-t ratio");
  });

  criterion(7, "distance-ratio search is finite and scale-invariant", [&] {
    GlobalBody body = build_body(generate_instance("twochamber", GenParams{}, 0));
    RatVec D = rv({0, 1});
    // Hand fixture: x = (1/2 | 1/4, 1) has cone distance 1/2 and ray
    // distance 1/4, ratio exactly 2.
    Rat fixture = rho_ratio(body, D, RatVec{Rat(1, 2), Rat(1, 4), Rat(1)});
    RhoReport rep = rho_bound_estimate(body, D, kRatioSamples, kSeed);
    bool ok = fixture == 2 && rep.samples == kRatioSamples && rep.scale_invariant &&
              rep.max_ratio >= 0;
    return std::make_pair(ok, "fixture ratio = " + to_string(fixture) + ", max over " +
                                  std::to_string(rep.samples) +
                                  " samples = " + to_string(rep.max_ratio) +
                                  ", every sample identical at 2x scale");
  });

  criterion(8, "double description round trips and Monte Carlo volume", [&] {
    SplitMix64 rng(kSeed ^ fnv1a("roundtrip"));
    int trips = 0;
    for (int i = 0; i < kRoundTripCones; ++i) {
      int d = 1 + static_cast<int>(rng.below(5));
      int k = 1 + static_cast<int>(rng.below(8));
      std::vector<RatVec> gens;
      for (int j = 0; j < k; ++j) {
        RatVec g(d, Rat(0));
        bool zero = true;
        while (zero) {
          for (int c = 0; c < d; ++c) {
            g[c] = Rat(static_cast<long long>(rng.below(9)) - 4);
            if (g[c] != 0) zero = false;
          }
        }
        gens.push_back(std::move(g));
      }
      Cone c = Cone::from_rays(d, gens);
      if (Cone::from_ineqs(d, c.inequalities()) == c && Cone::from_rays(d, c.generators()) == c)
        ++trips;
    }

    SplitMix64 prng(kSeed ^ fnv1a("mcvolume"));
    int volumes_ok = 0, made = 0;
    double worst = 0;
    while (made < kMcPolytopes) {
      int d = 1 + static_cast<int>(prng.below(4));
      std::vector<RatVec> pts;
      for (int j = 0; j < 2 * d + 4; ++j) {
        RatVec p(d);
        for (int c = 0; c < d; ++c) p[c] = Rat(static_cast<long long>(prng.below(9)));
        pts.push_back(std::move(p));
      }
      Polytope poly = Polytope::from_points(d, pts);
      if (poly.dim() < d) continue;  // need positive volume
      // Exact bounding box.
      RatVec lo = poly.vertices()[0], hi = poly.vertices()[0];
      for (const RatVec& v : poly.vertices())
        for (int c = 0; c < d; ++c) {
          lo[c] = std::min(lo[c], v[c]);
          hi[c] = std::max(hi[c], v[c]);
        }
      Rat box_vol = 1;
      for (int c = 0; c < d; ++c) box_vol *= hi[c] - lo[c];
      Rat exact = volume(poly);
      if (exact < box_vol * kMcMinBoxFraction) continue;  // keep sampling error small
      ++made;
      // Monte Carlo in doubles: hit fraction of the bounding box.
      std::vector<std::vector<double>> facets;
      for (const PolyIneq& f : poly.all_ineqs()) {
        std::vector<double> row;
        for (const Rat& a : f.a) row.push_back(to_double(a));
        row.push_back(to_double(f.b));
        facets.push_back(std::move(row));
      }
      std::vector<double> dlo, dwid;
      for (int c = 0; c < d; ++c) {
        dlo.push_back(to_double(lo[c]));
        dwid.push_back(to_double(hi[c] - lo[c]));
      }
      long long hits = 0;
      std::vector<double> x(d);
      for (int s = 0; s < kMcPoints; ++s) {
        for (int c = 0; c < d; ++c)
          x[c] = dlo[c] + dwid[c] * (static_cast<double>(prng.next() >> 11) * 0x1.0p-53);
        bool inside = true;
        for (const std::vector<double>& f : facets) {
          double dot = 0;
          for (int c = 0; c < d; ++c) dot += f[c] * x[c];
          if (dot < f[d]) {
            inside = false;
            break;
          }
        }
        if (inside) ++hits;
      }
      double est = to_double(box_vol) * static_cast<double>(hits) / kMcPoints;
      double rel = std::abs(est - to_double(exact)) / to_double(exact);
      worst = std::max(worst, rel);
      if (rel <= kMcRelTol) ++volumes_ok;
    }
    bool ok = trips == kRoundTripCones && volumes_ok == kMcPolytopes;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d/%d cone round trips exact; %d/%d volumes within 5%% (worst %.3f%%)",
                  trips, kRoundTripCones, volumes_ok, kMcPolytopes, worst * 100);
    return std::make_pair(ok, std::string(buf));
  });

  criterion(9, "verification report is byte-identical across runs and workers", [&] {
    std::vector<InstanceData> fx = fixtures();
    SuiteOptions one;
    one.samples_per_instance = kClassesPerInstance;
    one.pairs_per_instance = kPairsPerInstance;
    one.seed = kSeed;
    one.jobs = 1;
    SuiteOptions eight = one;
    eight.jobs = 8;
    SuiteReport ra = run_suite(fx, one);
    std::string a = suite_json(ra);
    std::string b = suite_json(run_suite(fx, eight));
    std::string c = suite_json(run_suite(fx, one));
    bool ok = ra.pass && a == b && a == c && !a.empty();
    return std::make_pair(ok, std::to_string(a.size()) +
                                  " bytes, identical for jobs=1, jobs=8 and a repeated run");
  });

  if (g_failed == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d of 9 criteria FAILED\n", g_failed);
  return 1;
}
