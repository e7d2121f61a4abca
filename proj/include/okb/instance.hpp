#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "okb/global_body.hpp"

namespace okb {

// Raw instance data as read from (or written to) the JSON file format:
//   {"name": str, "valuation_dim": int, "class_dim": int,
//    "rays": [[int,...],...]}            (generator form)
// or with "inequalities" in place of "rays" (facet form, rows mean a.x >= 0).
// Exactly one of the two descriptions is present.
struct InstanceData {
  std::string name;
  int valuation_dim = 0;
  int class_dim = 0;
  bool has_rays = false;
  bool has_ineqs = false;
  std::vector<std::vector<long long>> rays;
  std::vector<std::vector<long long>> inequalities;
};

// Strict parse of the JSON text; throws ValidationError (Malformed) naming
// the offending datum.  Does not build the body.
InstanceData parse_instance_text(const std::string& text);

// Builds and validates the global body described by the data; throws
// ValidationError on invalid input.
GlobalBody build_body(const InstanceData& d);

// parse + build in one step.
std::pair<InstanceData, GlobalBody> parse_instance(const std::string& text);

// Canonical JSON serialization of the data (2-space indent, field order
// name, valuation_dim, class_dim, rays|inequalities).
std::string instance_to_json(const InstanceData& d);

struct GenParams {
  int n = 2;              // valuation dimension
  int rho = 2;            // class dimension ("random" only)
  long long scale = 1;    // simplex dilation ("simplex_product" only)
  int ray_count = 6;      // "random" only, <= 12
  int max_coeff = 4;      // "random" only, <= 8
};

// Families:
//   "interval"         fixed 1+1-dimensional body with basis {(1) -> [0,1]}
//   "twochamber"       fixed 1+2-dimensional body with a wall at (1,1)
//   "simplex_product"  rays {(0..0|1)} + {(scale*e_i|1)}: fibers are dilated
//                      simplices
//   "random"           seeded integer rays in [0, max_coeff]^(n+rho) with
//                      nonzero class part, retried (seed+1, seed+2, ...)
//                      until the validated invariants hold
// Throws InputError on an unknown family or out-of-range parameters.
InstanceData generate_instance(const std::string& family, const GenParams& params,
                               std::uint64_t seed);

}  // namespace okb
