#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "okb/instance.hpp"

namespace okb {

struct SuiteOptions {
  int samples_per_instance = 100;
  int pairs_per_instance = 50;
  std::uint64_t seed = 42;
  int jobs = 1;
};

struct SuiteFailure {
  std::string check;   // "build", "decomposition", "dimension_bound",
                       // "numerical_dimension", "pair_additivity"
  std::string cls;     // the class (or pair/combination) involved
  std::string detail;  // canonical polytopes / expected vs got
};

struct InstanceReport {
  std::string name;
  int valuation_dim = 0, class_dim = 0;
  int basis_size = 0, chamber_count = 0;
  int classes_sampled = 0;
  int decomposition_pass = 0, decomposition_fail = 0;
  int dimension_pass = 0, dimension_fail = 0;
  int pair_pass = 0, pair_fail = 0;
  std::vector<SuiteFailure> failures;  // capped; the counter below keeps the rest
  int failures_omitted = 0;
  double seconds = 0;  // excluded from canonical JSON
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int samples_per_instance = 0, pairs_per_instance = 0;
  std::vector<InstanceReport> instances;
  bool pass = false;
  double seconds = 0;  // excluded from canonical JSON
};

// Stratified class sample.  Every dimension-one generator of the chamber
// fan (the extreme rays of the image cone together with all wall
// generators) is always included, even when those alone exceed `count`;
// the canonical interior points of the higher-dimensional cones and then
// seeded positive combinations round-robin across all cones top the list
// up to at least `count` classes (deduplicated), with at least half of
// `count` reserved for points beyond the generators.
std::vector<RatVec> sample_classes(const GlobalBody& body, int count, std::uint64_t seed);

// Per instance: build the body, sample classes, check the Minkowski
// decomposition exactly on each, check the dimension equality (bound first)
// on each, and check pair additivity on seeded in-chamber pairs.  Failures
// are recorded, never thrown.  Instances run in parallel across `jobs`
// workers; the report depends only on (instances, options), not on the
// worker count.
SuiteReport run_suite(const std::vector<InstanceData>& instances, const SuiteOptions& opts);

// Canonical machine-readable report: no timings, byte-identical for a fixed
// seed and instance list.
std::string suite_json(const SuiteReport& r);
// Human-readable table, timings included.
std::string suite_table(const SuiteReport& r);

}  // namespace okb
