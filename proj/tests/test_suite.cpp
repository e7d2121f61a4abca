#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "okb/errors.hpp"
#include "okb/instance.hpp"
#include "okb/linalg.hpp"
#include "okb/suite.hpp"

using namespace okb;

namespace {

std::vector<InstanceData> fixed_instances() {
  return {generate_instance("interval", GenParams{}, 0),
          generate_instance("twochamber", GenParams{}, 0)};
}

}  // namespace

TEST_CASE("class sampling covers every one-dimensional generator") {
  GlobalBody body = build_body(generate_instance("twochamber", GenParams{}, 0));
  std::vector<RatVec> classes = sample_classes(body, 30, 5);
  CHECK(static_cast<int>(classes.size()) >= 30);
  std::set<std::string> seen;
  for (const RatVec& c : classes) seen.insert(vec_to_string(c));
  CHECK(seen.size() == classes.size());  // deduplicated
  for (const Cone& c : body.chamber_fan().cones())
    if (c.dim() == 1)
      for (const RatVec& g : c.rays()) CHECK(seen.count(vec_to_string(g)) == 1);
  // Every sample lies in the image cone.
  for (const RatVec& c : classes) CHECK(body.image_cone().contains(c));
  CHECK(sample_classes(body, 0, 5).empty());
  CHECK_THROWS_AS(sample_classes(body, -1, 5), InputError);
  // Mandatory generators survive even a tiny count.
  std::vector<RatVec> tiny = sample_classes(body, 1, 5);
  std::set<std::string> tiny_seen;
  for (const RatVec& c : tiny) tiny_seen.insert(vec_to_string(c));
  CHECK(tiny_seen.count(vec_to_string(RatVec{Rat(1), Rat(1)})) == 1);  // the wall ray
}

TEST_CASE("suite passes on the fixed instances") {
  SuiteOptions opts;
  opts.samples_per_instance = 20;
  opts.pairs_per_instance = 10;
  SuiteReport rep = run_suite(fixed_instances(), opts);
  CHECK(rep.pass);
  REQUIRE(rep.instances.size() == 2);
  for (const InstanceReport& ir : rep.instances) {
    CHECK(ir.classes_sampled >= 20);
    CHECK(ir.decomposition_pass == ir.classes_sampled);
    CHECK(ir.decomposition_fail == 0);
    CHECK(ir.dimension_pass == ir.classes_sampled);
    CHECK(ir.dimension_fail == 0);
    CHECK(ir.pair_pass == 10);
    CHECK(ir.pair_fail == 0);
    CHECK(ir.failures.empty());
  }
  CHECK(rep.instances[0].name == "interval");
  CHECK(rep.instances[0].basis_size == 1);
  CHECK(rep.instances[1].name == "twochamber");
  CHECK(rep.instances[1].basis_size == 3);
  // All cones of the chamber fan: two maximal chambers, three rays, origin.
  CHECK(rep.instances[1].chamber_count == 6);
}

TEST_CASE("suite records a build failure instead of throwing") {
  InstanceData bad;
  bad.name = "flat";
  bad.valuation_dim = 1;
  bad.class_dim = 1;
  bad.has_rays = true;
  bad.rays = {{1, 1}};  // not full-dimensional
  SuiteOptions opts;
  opts.samples_per_instance = 5;
  SuiteReport rep = run_suite({bad}, opts);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.instances.size() == 1);
  REQUIRE(rep.instances[0].failures.size() == 1);
  CHECK(rep.instances[0].failures[0].check == "build");
}

TEST_CASE("canonical report is byte-identical across runs and worker counts") {
  std::vector<InstanceData> insts = fixed_instances();
  GenParams gp;
  gp.n = 2;
  gp.rho = 2;
  gp.ray_count = 5;
  gp.max_coeff = 4;
  insts.push_back(generate_instance("random", gp, 7));
  SuiteOptions one;
  one.samples_per_instance = 15;
  one.pairs_per_instance = 8;
  one.jobs = 1;
  SuiteOptions eight = one;
  eight.jobs = 8;
  std::string a = suite_json(run_suite(insts, one));
  std::string b = suite_json(run_suite(insts, eight));
  std::string c = suite_json(run_suite(insts, one));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.find("\"seconds\"") == std::string::npos);
  // The human table at least mentions every instance.
  std::string table = suite_table(run_suite(insts, one));
  for (const InstanceData& d : insts) CHECK(table.find(d.name) != std::string::npos);
}

TEST_CASE("report depends on the seed") {
  std::vector<InstanceData> insts = fixed_instances();
  SuiteOptions a;
  a.samples_per_instance = 12;
  a.pairs_per_instance = 6;
  a.seed = 1;
  SuiteOptions b = a;
  b.seed = 2;
  // Same classes may recur (the mandatory strata dominate), but the JSON
  // header records the seed, so the reports must differ.
  CHECK(suite_json(run_suite(insts, a)) != suite_json(run_suite(insts, b)));
}
