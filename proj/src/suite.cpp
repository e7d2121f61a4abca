#include "okb/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "okb/errors.hpp"
#include "okb/numdim.hpp"
#include "okb/util.hpp"

namespace okb {

namespace {

constexpr int kMaxRecordedFailures = 25;

void record_failure(InstanceReport& rep, std::string check, std::string cls,
                    std::string detail) {
  if (static_cast<int>(rep.failures.size()) < kMaxRecordedFailures)
    rep.failures.push_back(SuiteFailure{std::move(check), std::move(cls), std::move(detail)});
  else
    ++rep.failures_omitted;
}

// Seeded strictly positive coefficient with a wide, duplicate-resistant
// range.
Rat positive_coeff(SplitMix64& rng) {
  return Rat(static_cast<long>(1 + rng.below(64))) / Rat(static_cast<long>(1 + rng.below(64)));
}

RatVec relint_sample(const Cone& c, SplitMix64& rng) {
  RatVec x = zero_vec(c.ambient_dim());
  for (const RatVec& r : c.rays()) x = add(x, scaled(r, positive_coeff(rng)));
  return x;
}

InstanceReport run_instance(const InstanceData& data, const SuiteOptions& opts,
                            std::uint64_t sub_seed) {
  auto started = std::chrono::steady_clock::now();
  InstanceReport rep;
  rep.name = data.name;
  rep.valuation_dim = data.valuation_dim;
  rep.class_dim = data.class_dim;
  auto stop_clock = [&] {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };
  try {
    GlobalBody body = build_body(data);
    rep.basis_size = static_cast<int>(body.basis().entries.size());
    rep.chamber_count = static_cast<int>(body.chamber_fan().size());

    std::vector<RatVec> classes = sample_classes(body, opts.samples_per_instance, sub_seed);
    rep.classes_sampled = static_cast<int>(classes.size());
    RatVec ample = pick_ample(body);

    for (const RatVec& d : classes) {
      DecompReport dr = body.verify_decomposition(d);
      if (dr.ok) {
        ++rep.decomposition_pass;
      } else {
        ++rep.decomposition_fail;
        record_failure(rep, "decomposition", vec_to_string(d),
                       dr.reason + "; body " + dr.lhs.key() + ", sum " + dr.rhs.key());
      }
      try {
        int fiber_dim = body_dimension(body, d);
        int nu = numerical_dimension(body, d, ample);
        if (fiber_dim > nu) {
          ++rep.dimension_fail;
          record_failure(rep, "dimension_bound", vec_to_string(d),
                         "dim body = " + std::to_string(fiber_dim) +
                             " exceeds its volume-growth bound " + std::to_string(nu));
        } else if (fiber_dim != nu) {
          ++rep.dimension_fail;
          record_failure(rep, "numerical_dimension", vec_to_string(d),
                         "dim body = " + std::to_string(fiber_dim) + ", volume growth gives " +
                             std::to_string(nu));
        } else {
          ++rep.dimension_pass;
        }
      } catch (const Error& e) {
        ++rep.dimension_fail;
        record_failure(rep, "numerical_dimension", vec_to_string(d), e.what());
      }
    }

    // In-chamber pairs: both classes and the combination share one chamber
    // by construction, so exact additivity must hold.
    std::vector<const Cone*> strata;
    for (const Cone& c : body.chamber_fan().cones())
      if (c.dim() >= 1) strata.push_back(&c);
    SplitMix64 rng(sub_seed ^ fnv1a("pairs"));
    for (int i = 0; i < opts.pairs_per_instance && !strata.empty(); ++i) {
      const Cone& c = *strata[i % strata.size()];
      RatVec d1 = relint_sample(c, rng);
      RatVec d2 = relint_sample(c, rng);
      Rat a = positive_coeff(rng);
      Rat b = positive_coeff(rng);
      PairReport pr = body.check_pair_additivity(d1, d2, a, b);
      std::string cls = vec_to_string(d1) + " + " + vec_to_string(d2) + " weighted " +
                        to_string(a) + ", " + to_string(b);
      if (pr.hypothesis_met && pr.ok) {
        ++rep.pair_pass;
      } else {
        ++rep.pair_fail;
        record_failure(rep, "pair_additivity", cls,
                       std::string(pr.hypothesis_met ? "hypothesis met" : "hypothesis NOT met") +
                           "; combined body " + pr.lhs.key() + ", weighted sum " + pr.rhs.key());
      }
    }
  } catch (const Error& e) {
    record_failure(rep, "build", "", e.what());
  }
  stop_clock();
  return rep;
}

}  // namespace

std::vector<RatVec> sample_classes(const GlobalBody& body, int count, std::uint64_t seed) {
  if (count < 0) throw InputError("sample_classes: count must be >= 0");
  std::vector<const Cone*> strata;
  int dim_one = 0;
  for (const Cone& c : body.chamber_fan().cones())
    if (c.dim() >= 1) {
      strata.push_back(&c);
      if (c.dim() == 1) ++dim_one;
    }
  // Every dimension-one generator (extreme rays of the image cone together
  // with all wall generators) is always sampled, even when those alone
  // exceed the quota; at least half the quota on top of them is then spent
  // inside higher-dimensional chambers so decompositions are also exercised
  // away from the walls.
  if (count == 0) return {};
  const int target = std::max(count, dim_one + count / 2);
  std::vector<RatVec> out;
  std::set<std::string> seen;
  auto push = [&](RatVec x, int cap) {
    if (static_cast<int>(out.size()) >= cap) return;
    if (seen.insert(vec_to_string(x)).second) out.push_back(std::move(x));
  };
  for (const Cone* c : strata)
    if (c->dim() == 1) push(c->relint_point(), target);
  for (const Cone* c : strata) push(c->relint_point(), target);
  SplitMix64 rng(seed ^ fnv1a("classes"));
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 200 * static_cast<std::uint64_t>(target) + 1000;
  while (static_cast<int>(out.size()) < target && !strata.empty()) {
    if (++attempts > max_attempts) break;  // tiny fans cannot always fill the quota
    const Cone& c = *strata[attempts % strata.size()];
    push(relint_sample(c, rng), target);
  }
  return out;
}

SuiteReport run_suite(const std::vector<InstanceData>& instances, const SuiteOptions& opts) {
  if (opts.jobs < 1) throw InputError("run_suite: jobs must be >= 1");
  if (opts.samples_per_instance < 0 || opts.pairs_per_instance < 0)
    throw InputError("run_suite: sample counts must be >= 0");
  auto started = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.seed = opts.seed;
  rep.samples_per_instance = opts.samples_per_instance;
  rep.pairs_per_instance = opts.pairs_per_instance;
  rep.instances.resize(instances.size());

  // One task per instance; the per-task sub-seed depends only on the suite
  // seed and the task index, so the report is independent of the worker
  // count.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      std::uint64_t sub_seed = SplitMix64(opts.seed + 0x9e3779b97f4a7c15ULL * (i + 1)).next();
      rep.instances[i] = run_instance(instances[i], opts, sub_seed);
    }
  };
  int jobs = std::min<int>(opts.jobs, std::max<std::size_t>(instances.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  rep.pass = true;
  for (const InstanceReport& ir : rep.instances) {
    bool instance_ok = ir.decomposition_fail == 0 && ir.dimension_fail == 0 &&
                       ir.pair_fail == 0 && ir.failures.empty();
    rep.pass = rep.pass && instance_ok;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rep;
}

std::string suite_json(const SuiteReport& r) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json j;
  j["seed"] = r.seed;
  j["samples_per_instance"] = r.samples_per_instance;
  j["pairs_per_instance"] = r.pairs_per_instance;
  j["instances"] = ordered_json::array();
  for (const InstanceReport& ir : r.instances) {
    ordered_json e;
    e["name"] = ir.name;
    e["valuation_dim"] = ir.valuation_dim;
    e["class_dim"] = ir.class_dim;
    e["basis_size"] = ir.basis_size;
    e["chamber_count"] = ir.chamber_count;
    e["classes_sampled"] = ir.classes_sampled;
    e["decomposition"] = {{"pass", ir.decomposition_pass}, {"fail", ir.decomposition_fail}};
    e["dimension"] = {{"pass", ir.dimension_pass}, {"fail", ir.dimension_fail}};
    e["pairs"] = {{"pass", ir.pair_pass}, {"fail", ir.pair_fail}};
    e["failures"] = ordered_json::array();
    for (const SuiteFailure& f : ir.failures)
      e["failures"].push_back(
          ordered_json{{"check", f.check}, {"class", f.cls}, {"detail", f.detail}});
    if (ir.failures_omitted > 0) e["failures_omitted"] = ir.failures_omitted;
    j["instances"].push_back(std::move(e));
  }
  j["verdict"] = r.pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string suite_table(const SuiteReport& r) {
  std::ostringstream os;
  os << "instance                          dims  basis  chambers  classes  decomp  dimension  "
        "pairs   seconds\n";
  for (const InstanceReport& ir : r.instances) {
    char line[256];
    std::snprintf(line, sizeof line, "%-32s %d+%d  %5d  %8d  %7d  %3d/%-3d  %4d/%-4d  %3d/%-3d %9.2f\n",
                  ir.name.c_str(), ir.valuation_dim, ir.class_dim, ir.basis_size,
                  ir.chamber_count, ir.classes_sampled, ir.decomposition_pass,
                  ir.decomposition_fail, ir.dimension_pass, ir.dimension_fail, ir.pair_pass,
                  ir.pair_fail, ir.seconds);
    os << line;
    for (const SuiteFailure& f : ir.failures)
      os << "  FAIL [" << f.check << "] class " << f.cls << ": " << f.detail << "\n";
    if (ir.failures_omitted > 0)
      os << "  (" << ir.failures_omitted << " further failures omitted)\n";
  }
  os << (r.pass ? "verdict: pass" : "verdict: FAIL") << "  (" << r.instances.size()
     << " instances, " << r.seconds << "s)\n";
  return os.str();
}

}  // namespace okb
