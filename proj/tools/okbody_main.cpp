#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "okb/errors.hpp"
#include "okb/instance.hpp"
#include "okb/numdim.hpp"
#include "okb/suite.hpp"

namespace {

using namespace okb;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RatVec parse_class(const std::string& text) {
  RatVec out;
  std::string piece;
  std::istringstream ss(text);
  while (std::getline(ss, piece, ',')) {
    piece.erase(0, piece.find_first_not_of(" \t"));
    piece.erase(piece.find_last_not_of(" \t") + 1);
    out.push_back(rat_from_string(piece));
  }
  if (out.empty()) throw InputError("empty class vector");
  return out;
}

ordered_json vec_json(const RatVec& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& r : v) a.push_back(to_string(r));
  return a;
}

ordered_json vertices_json(const Polytope& p) {
  ordered_json a = ordered_json::array();
  for (const RatVec& v : p.vertices()) a.push_back(vec_json(v));
  return a;
}

std::string vertices_text(const Polytope& p) {
  if (p.is_empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) s += ", ";
    s += vec_to_string(p.vertices()[i]);
  }
  return s;
}

std::string poly_text(const std::vector<Rat>& coeffs) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0 && !(coeffs.size() == 1)) continue;
    if (!s.empty()) s += " + ";
    s += to_string(coeffs[k]);
    if (k == 1) s += "*t";
    if (k > 1) s += "*t^" + std::to_string(k);
  }
  if (s.empty()) s = "0";
  return s;
}

int cmd_basis(const std::string& file, const std::string& format) {
  auto [data, body] = parse_instance(read_file(file));
  const MinkBasis& basis = body.basis();
  if (format == "json") {
    ordered_json j;
    j["name"] = data.name;
    j["valuation_dim"] = body.valuation_dim();
    j["class_dim"] = body.class_dim();
    j["chamber_count"] = body.chamber_fan().size();
    j["basis"] = ordered_json::array();
    for (const BasisEntry& e : basis.entries)
      j["basis"].push_back(
          ordered_json{{"ray", vec_json(e.ray)}, {"body_vertices", vertices_json(e.body)}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "instance " << (data.name.empty() ? file : data.name) << ": basis with "
              << basis.entries.size() << " elements, chamber fan with "
              << body.chamber_fan().size() << " cones\n";
    for (const BasisEntry& e : basis.entries)
      std::cout << "  ray " << vec_to_string(e.ray) << "  body: " << vertices_text(e.body)
                << "\n";
  }
  return 0;
}

int cmd_chambers(const std::string& file, const std::string& format) {
  auto [data, body] = parse_instance(read_file(file));
  const Fan& fan = body.chamber_fan();
  if (format == "json") {
    ordered_json j;
    j["name"] = data.name;
    j["ambient_dim"] = fan.ambient_dim();
    j["cones"] = ordered_json::array();
    for (const Cone& c : fan.cones()) {
      ordered_json e;
      e["dim"] = c.dim();
      e["rays"] = ordered_json::array();
      for (const RatVec& r : c.rays()) e["rays"].push_back(vec_json(r));
      j["cones"].push_back(std::move(e));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chamber fan in dimension " << fan.ambient_dim() << " with " << fan.size()
              << " cones\n";
    for (const Cone& c : fan.cones()) {
      std::cout << "  dim " << c.dim() << ":";
      if (c.is_zero_cone()) std::cout << " origin";
      for (const RatVec& r : c.rays()) std::cout << " " << vec_to_string(r);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_fiber(const std::string& file, const std::string& cls_text, const std::string& format) {
  auto [data, body] = parse_instance(read_file(file));
  RatVec d = parse_class(cls_text);
  Polytope fib = body.fiber(d);
  if (format == "json") {
    ordered_json j;
    j["class"] = vec_json(d);
    j["dimension"] = fib.dim();
    j["vertices"] = vertices_json(fib);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "body over " << vec_to_string(d) << ": dimension " << fib.dim()
              << "\n  vertices: " << vertices_text(fib) << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& cls_text,
                  const std::string& format) {
  auto [data, body] = parse_instance(read_file(file));
  RatVec d = parse_class(cls_text);
  DecompReport rep = body.verify_decomposition(d);
  const MinkBasis& basis = body.basis();
  if (format == "json") {
    ordered_json j;
    j["class"] = vec_json(d);
    j["weights"] = ordered_json::array();
    for (const WeightedRay& w : rep.weights)
      j["weights"].push_back(ordered_json{{"ray", vec_json(basis.entries[w.index].ray)},
                                          {"weight", to_string(w.weight)}});
    j["verified"] = rep.ok;
    j["body_vertices"] = vertices_json(rep.lhs);
    j["sum_vertices"] = vertices_json(rep.rhs);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "decomposition of " << vec_to_string(d) << ":\n";
    for (const WeightedRay& w : rep.weights)
      std::cout << "  " << to_string(w.weight) << " * ray "
                << vec_to_string(basis.entries[w.index].ray) << "\n";
    std::cout << "  body:         " << vertices_text(rep.lhs) << "\n";
    std::cout << "  weighted sum: " << vertices_text(rep.rhs) << "\n";
    std::cout << "  identity " << (rep.ok ? "verified" : std::string("FAILED: ") + rep.reason)
              << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_numdim(const std::string& file, const std::string& cls_text,
               const std::string& ample_text, int k_max, const std::string& format) {
  auto [data, body] = parse_instance(read_file(file));
  RatVec d = parse_class(cls_text);
  RatVec ample = ample_text.empty() ? pick_ample(body) : parse_class(ample_text);
  VolPoly vp = volume_polynomial(body, d, ample);
  int ord = 0;
  while (vp.coeffs[ord] == 0) ++ord;
  int nu = body.valuation_dim() - ord;
  int bd = body_dimension(body, d);
  SandwichReport sw = sandwich_check(body, d, ample, k_max);
  bool verified = (bd == nu) && sw.ok;
  if (format == "json") {
    ordered_json j;
    j["class"] = vec_json(d);
    j["ample"] = vec_json(ample);
    j["body_dimension"] = bd;
    j["numerical_dimension"] = nu;
    j["t0"] = to_string(vp.t0);
    j["volume_polynomial"] = vec_json(vp.coeffs);
    ordered_json s;
    s["eps"] = to_string(sw.eps);
    s["translate"] = vec_json(sw.translate);
    s["ratio_bound"] = to_string(sw.ratio_bound);
    s["samples"] = ordered_json::array();
    for (const SandwichSample& x : sw.samples)
      s["samples"].push_back(ordered_json{{"t", to_string(x.t)},
                                          {"inner_ok", x.inner_ok},
                                          {"outer_dist", to_string(x.outer_dist)},
                                          {"ratio", to_string(x.ratio)}});
    s["ok"] = sw.ok;
    j["sandwich"] = std::move(s);
    j["verified"] = verified;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "class " << vec_to_string(d) << ", ample direction " << vec_to_string(ample)
              << "\n";
    std::cout << "  body dimension:       " << bd << "\n";
    std::cout << "  numerical dimension:  " << nu << "\n";
    std::cout << "  volume polynomial:    " << poly_text(vp.coeffs) << "  on (0, "
              << to_string(vp.t0) << "]\n";
    std::cout << "  sandwich: eps = " << to_string(sw.eps) << ", translate "
              << vec_to_string(sw.translate) << ", ratio bound " << to_string(sw.ratio_bound)
              << "\n";
    for (const SandwichSample& x : sw.samples)
      std::cout << "    t = " << to_string(x.t) << ": inner "
                << (x.inner_ok ? "ok" : "VIOLATED") << ", outer distance "
                << to_string(x.outer_dist) << ", ratio " << to_string(x.ratio) << "\n";
    std::cout << "  " << (verified ? "verified" : "FAILED") << "\n";
  }
  return verified ? 0 : 1;
}

int cmd_verify(const std::string& path, int samples, int pairs, std::uint64_t seed, int jobs,
               const std::string& format) {
  namespace fs = std::filesystem;
  std::vector<InstanceData> list;
  if (fs::is_directory(path)) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    for (const std::string& f : files) list.push_back(parse_instance_text(read_file(f)));
  } else {
    list.push_back(parse_instance_text(read_file(path)));
  }
  SuiteOptions opts;
  opts.samples_per_instance = samples;
  opts.pairs_per_instance = pairs;
  opts.seed = seed;
  opts.jobs = jobs;
  SuiteReport rep = run_suite(list, opts);
  std::cout << (format == "json" ? suite_json(rep) : suite_table(rep));
  return rep.pass ? 0 : 1;
}

int cmd_gen(const std::string& family, const GenParams& gp, std::uint64_t seed,
            const std::string& out_path) {
  InstanceData d = generate_instance(family, gp, seed);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + out_path);
  out << instance_to_json(d);
  std::cout << "wrote " << out_path << " (" << d.name << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polyhedral toolkit for numerical Okounkov bodies"};
  app.require_subcommand(1);

  std::string file, cls_text, ample_text, format = "table", family, out_path;
  int samples = 100, pairs = 50, jobs = 1, k_max = 4;
  std::uint64_t seed = 42;
  GenParams gp;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* basis = app.add_subcommand("basis", "print the Minkowski basis");
  basis->add_option("file", file, "instance JSON file")->required();
  add_format(basis);

  CLI::App* chambers = app.add_subcommand("chambers", "print the projected chamber fan");
  chambers->add_option("file", file, "instance JSON file")->required();
  add_format(chambers);

  CLI::App* fiber = app.add_subcommand("fiber", "print the body over a class");
  fiber->add_option("file", file, "instance JSON file")->required();
  fiber->add_option("--class", cls_text, "comma-separated rational class vector")->required();
  add_format(fiber);

  CLI::App* decompose =
      app.add_subcommand("decompose", "decompose a class and verify the Minkowski identity");
  decompose->add_option("file", file, "instance JSON file")->required();
  decompose->add_option("--class", cls_text, "comma-separated rational class vector")->required();
  add_format(decompose);

  CLI::App* numdim =
      app.add_subcommand("numdim", "body dimension, volume growth and sandwich report");
  numdim->add_option("file", file, "instance JSON file")->required();
  numdim->add_option("--class", cls_text, "comma-separated rational class vector")->required();
  numdim->add_option("--ample", ample_text, "interior class (default: sum of image rays)");
  numdim->add_option("--kmax", k_max, "number of sandwich halvings")->check(CLI::Range(1, 30));
  add_format(numdim);

  CLI::App* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("path", file, "instance JSON file or directory")->required();
  verify->add_option("--samples", samples, "classes sampled per instance");
  verify->add_option("--pairs", pairs, "additivity pairs per instance");
  verify->add_option("--seed", seed, "suite seed");
  verify->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1, 256));
  add_format(verify);

  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--family", family, "interval | twochamber | simplex_product | random")
      ->required();
  gen->add_option("--n", gp.n, "valuation dimension");
  gen->add_option("--rho", gp.rho, "class dimension (random)");
  gen->add_option("--scale", gp.scale, "dilation (simplex_product)");
  gen->add_option("--ray-count", gp.ray_count, "ray count (random)");
  gen->add_option("--max-coeff", gp.max_coeff, "coefficient bound (random)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("-o,--output", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(basis)) return cmd_basis(file, format);
    if (app.got_subcommand(chambers)) return cmd_chambers(file, format);
    if (app.got_subcommand(fiber)) return cmd_fiber(file, cls_text, format);
    if (app.got_subcommand(decompose)) return cmd_decompose(file, cls_text, format);
    if (app.got_subcommand(numdim)) return cmd_numdim(file, cls_text, ample_text, k_max, format);
    if (app.got_subcommand(verify)) return cmd_verify(file, samples, pairs, seed, jobs, format);
    if (app.got_subcommand(gen)) return cmd_gen(family, gp, seed, out_path);
  } catch (const NotPseudoEffective& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ContainmentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
