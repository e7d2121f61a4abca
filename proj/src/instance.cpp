#include "okb/instance.hpp"

#include <limits>
#include <set>

#include "json.hpp"

#include "okb/errors.hpp"
#include "okb/util.hpp"

namespace okb {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& detail) {
  throw ValidationError(ValidationError::Reason::Malformed, detail);
}

int positive_dim_field(const json& j, const char* field) {
  if (!j.contains(field)) malformed(std::string("missing field \"") + field + "\"");
  const json& v = j.at(field);
  if (!v.is_number_integer()) malformed(std::string("field \"") + field + "\" must be an integer");
  auto raw = v.get<std::int64_t>();
  if (raw < 1 || raw > 64)
    malformed(std::string("field \"") + field + "\" must be between 1 and 64, got " +
              std::to_string(raw));
  return static_cast<int>(raw);
}

std::vector<std::vector<long long>> integer_rows(const json& v, const char* field, int width) {
  if (!v.is_array()) malformed(std::string("field \"") + field + "\" must be an array of arrays");
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& row = v[i];
    if (!row.is_array())
      malformed(std::string("row ") + std::to_string(i) + " of \"" + field +
                "\" must be an array");
    if (static_cast<int>(row.size()) != width)
      malformed(std::string("row ") + std::to_string(i) + " of \"" + field + "\" has length " +
                std::to_string(row.size()) + ", expected " + std::to_string(width));
    std::vector<long long> out;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const json& e = row[k];
      if (!e.is_number_integer())
        malformed(std::string("entry ") + std::to_string(k) + " of row " + std::to_string(i) +
                  " of \"" + field + "\" must be an integer");
      if (e.is_number_unsigned() &&
          e.get<std::uint64_t>() >
              static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        malformed(std::string("entry ") + std::to_string(k) + " of row " + std::to_string(i) +
                  " of \"" + field + "\" is out of range");
      out.push_back(e.get<std::int64_t>());
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

}  // namespace

InstanceData parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("top level must be a JSON object");
  static const std::set<std::string> known = {"name", "valuation_dim", "class_dim", "rays",
                                              "inequalities"};
  for (const auto& item : j.items())
    if (!known.count(item.key())) malformed("unexpected field \"" + item.key() + "\"");

  InstanceData d;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) malformed("field \"name\" must be a string");
    d.name = j.at("name").get<std::string>();
  }
  d.valuation_dim = positive_dim_field(j, "valuation_dim");
  d.class_dim = positive_dim_field(j, "class_dim");
  d.has_rays = j.contains("rays");
  d.has_ineqs = j.contains("inequalities");
  if (d.has_rays == d.has_ineqs)
    malformed("exactly one of \"rays\" and \"inequalities\" must be present");
  const int width = d.valuation_dim + d.class_dim;
  if (d.has_rays)
    d.rays = integer_rows(j.at("rays"), "rays", width);
  else
    d.inequalities = integer_rows(j.at("inequalities"), "inequalities", width);
  return d;
}

GlobalBody build_body(const InstanceData& d) {
  const int ambient = d.valuation_dim + d.class_dim;
  const auto& rows = d.has_rays ? d.rays : d.inequalities;
  std::vector<RatVec> vecs;
  for (const auto& row : rows) {
    RatVec v;
    for (long long e : row) v.push_back(Rat(e));
    vecs.push_back(std::move(v));
  }
  try {
    Cone c = d.has_rays ? Cone::from_rays(ambient, vecs) : Cone::from_ineqs(ambient, vecs);
    return GlobalBody(d.valuation_dim, d.class_dim, std::move(c));
  } catch (const InputError& e) {
    malformed(e.what());
  }
}

std::pair<InstanceData, GlobalBody> parse_instance(const std::string& text) {
  InstanceData d = parse_instance_text(text);
  GlobalBody body = build_body(d);
  return {std::move(d), std::move(body)};
}

std::string instance_to_json(const InstanceData& d) {
  ordered_json j;
  j["name"] = d.name;
  j["valuation_dim"] = d.valuation_dim;
  j["class_dim"] = d.class_dim;
  const char* field = d.has_ineqs ? "inequalities" : "rays";
  j[field] = d.has_ineqs ? d.inequalities : d.rays;
  return j.dump(2) + "\n";
}

InstanceData generate_instance(const std::string& family, const GenParams& params,
                               std::uint64_t seed) {
  InstanceData d;
  d.has_rays = true;
  if (family == "interval") {
    d.name = "interval";
    d.valuation_dim = 1;
    d.class_dim = 1;
    d.rays = {{0, 1}, {1, 1}};
    return d;
  }
  if (family == "twochamber") {
    d.name = "twochamber";
    d.valuation_dim = 1;
    d.class_dim = 2;
    d.rays = {{0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {2, 1, 1}};
    return d;
  }
  if (family == "simplex_product") {
    if (params.n < 1 || params.n > 8)
      throw InputError("simplex_product: n must be between 1 and 8");
    if (params.scale < 1 || params.scale > 1000000)
      throw InputError("simplex_product: scale must be between 1 and 10^6");
    d.name = "simplex_product_n" + std::to_string(params.n) + "_s" + std::to_string(params.scale);
    d.valuation_dim = params.n;
    d.class_dim = 1;
    d.rays.assign(1, std::vector<long long>(params.n + 1, 0));
    d.rays[0][params.n] = 1;
    for (int i = 0; i < params.n; ++i) {
      std::vector<long long> r(params.n + 1, 0);
      r[i] = params.scale;
      r[params.n] = 1;
      d.rays.push_back(std::move(r));
    }
    return d;
  }
  if (family == "random") {
    const int n = params.n, rho = params.rho, k = params.ray_count, M = params.max_coeff;
    if (n < 1 || rho < 1) throw InputError("random: n and rho must be at least 1");
    if (k < 1 || k > 12) throw InputError("random: ray_count must be between 1 and 12");
    if (M < 1 || M > 8) throw InputError("random: max_coeff must be between 1 and 8");
    if (k < n + rho)
      throw InputError("random: ray_count must be at least n + rho for a full-dimensional cone");
    d.name = "random_n" + std::to_string(n) + "_r" + std::to_string(rho) + "_k" +
             std::to_string(k) + "_M" + std::to_string(M) + "_s" + std::to_string(seed);
    d.valuation_dim = n;
    d.class_dim = rho;
    // Nonnegative coordinates make the cone pointed and its fibers bounded
    // automatically (a nonnegative combination with zero class block forces
    // every coefficient of a nonzero-class ray to vanish); only full
    // dimensionality can fail, so the retry loop terminates fast.
    for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
      SplitMix64 rng(seed + attempt);
      d.rays.clear();
      for (int i = 0; i < k; ++i) {
        std::vector<long long> r(n + rho);
        bool class_zero = true;
        while (class_zero) {
          for (int c = 0; c < n + rho; ++c) r[c] = static_cast<long long>(rng.below(M + 1));
          for (int c = n; c < n + rho; ++c) class_zero = class_zero && r[c] == 0;
        }
        d.rays.push_back(r);
      }
      try {
        std::vector<RatVec> vecs;
        for (const auto& row : d.rays) {
          RatVec v;
          for (long long e : row) v.push_back(Rat(e));
          vecs.push_back(std::move(v));
        }
        GlobalBody::validate_cone(n, rho, Cone::from_rays(n + rho, vecs));
        return d;
      } catch (const ValidationError&) {
        continue;
      }
    }
    throw Error("generate_instance: no valid random instance after 10000 attempts");
  }
  throw InputError("unknown family \"" + family +
                   "\" (expected interval, twochamber, simplex_product, or random)");
}

}  // namespace okb
