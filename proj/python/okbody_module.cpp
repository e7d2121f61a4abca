#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "okb/errors.hpp"
#include "okb/instance.hpp"
#include "okb/numdim.hpp"
#include "okb/suite.hpp"

namespace py = pybind11;

namespace {

using namespace okb;

// Exact transport: rationals cross the boundary as fractions.Fraction (or
// int / "p/q" strings coming in); floats are rejected by the parser.
py::object to_fraction(const Rat& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

Rat rat_from_py(py::handle h) { return rat_from_string(py::cast<std::string>(py::str(h))); }

RatVec vec_from_py(py::handle seq) {
  RatVec out;
  for (py::handle item : py::iter(seq)) out.push_back(rat_from_py(item));
  return out;
}

py::list vec_to_py(const RatVec& v) {
  py::list out;
  for (const Rat& r : v) out.append(to_fraction(r));
  return out;
}

py::list vertices_to_py(const Polytope& p) {
  py::list out;
  for (const RatVec& v : p.vertices()) out.append(vec_to_py(v));
  return out;
}

struct PyBody {
  InstanceData data;
  GlobalBody body;

  RatVec ample_or_default(py::handle ample) const {
    return ample.is_none() ? pick_ample(body) : vec_from_py(ample);
  }
};

}  // namespace

PYBIND11_MODULE(okbody, m) {
  m.doc() = "exact polyhedral toolkit for numerical Okounkov bodies";

  py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError");
  py::register_exception<ContainmentError>(m, "ContainmentError");
  py::register_exception<NotPseudoEffective>(m, "NotPseudoEffective");
  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<BasisLookupError>(m, "BasisLookupError");
  py::register_exception<InterpolationError>(m, "InterpolationError");

  py::class_<PyBody>(m, "Body")
      .def_property_readonly("name", [](const PyBody& b) { return b.data.name; })
      .def_property_readonly("valuation_dim",
                             [](const PyBody& b) { return b.body.valuation_dim(); })
      .def_property_readonly("class_dim", [](const PyBody& b) { return b.body.class_dim(); })
      .def("instance_json", [](const PyBody& b) { return instance_to_json(b.data); })
      .def(
          "fiber",
          [](const PyBody& b, py::handle cls) { return vertices_to_py(b.body.fiber(vec_from_py(cls))); },
          py::arg("cls"), "vertex list of the body over the class")
      .def(
          "fiber_dimension",
          [](const PyBody& b, py::handle cls) { return body_dimension(b.body, vec_from_py(cls)); },
          py::arg("cls"))
      .def("chambers",
           [](const PyBody& b) {
             py::list out;
             for (const Cone& c : b.body.chamber_fan().cones()) {
               py::dict e;
               e["dim"] = c.dim();
               py::list rays;
               for (const RatVec& r : c.rays()) rays.append(vec_to_py(r));
               e["rays"] = rays;
               out.append(e);
             }
             return out;
           })
      .def("basis",
           [](const PyBody& b) {
             py::list out;
             for (const BasisEntry& e : b.body.basis().entries) {
               py::dict d;
               d["ray"] = vec_to_py(e.ray);
               d["vertices"] = vertices_to_py(e.body);
               out.append(d);
             }
             return out;
           })
      .def(
          "decompose",
          [](const PyBody& b, py::handle cls) {
            py::list out;
            const auto& entries = b.body.basis().entries;
            for (const WeightedRay& w : b.body.decompose(vec_from_py(cls)))
              out.append(py::make_tuple(vec_to_py(entries[w.index].ray), to_fraction(w.weight)));
            return out;
          },
          py::arg("cls"), "list of (ray, weight) pairs")
      .def(
          "verify_decomposition",
          [](const PyBody& b, py::handle cls) {
            DecompReport rep = b.body.verify_decomposition(vec_from_py(cls));
            py::dict out;
            out["ok"] = rep.ok;
            out["reason"] = rep.reason;
            py::list weights;
            const auto& entries = b.body.basis().entries;
            for (const WeightedRay& w : rep.weights)
              weights.append(
                  py::make_tuple(vec_to_py(entries[w.index].ray), to_fraction(w.weight)));
            out["weights"] = weights;
            out["body_vertices"] = vertices_to_py(rep.lhs);
            out["sum_vertices"] = vertices_to_py(rep.rhs);
            return out;
          },
          py::arg("cls"))
      .def(
          "pair_additivity",
          [](const PyBody& b, py::handle d1, py::handle d2, py::handle a, py::handle bb) {
            PairReport rep = b.body.check_pair_additivity(vec_from_py(d1), vec_from_py(d2),
                                                          rat_from_py(a), rat_from_py(bb));
            py::dict out;
            out["hypothesis_met"] = rep.hypothesis_met;
            out["ok"] = rep.ok;
            out["body_vertices"] = vertices_to_py(rep.lhs);
            out["sum_vertices"] = vertices_to_py(rep.rhs);
            return out;
          },
          py::arg("d1"), py::arg("d2"), py::arg("a"), py::arg("b"))
      .def("pick_ample", [](const PyBody& b) { return vec_to_py(pick_ample(b.body)); })
      .def(
          "numerical_dimension",
          [](const PyBody& b, py::handle cls, py::handle ample) {
            return numerical_dimension(b.body, vec_from_py(cls), b.ample_or_default(ample));
          },
          py::arg("cls"), py::arg("ample") = py::none())
      .def(
          "volume_polynomial",
          [](const PyBody& b, py::handle cls, py::handle ample) {
            VolPoly p = volume_polynomial(b.body, vec_from_py(cls), b.ample_or_default(ample));
            py::dict out;
            out["coeffs"] = vec_to_py(p.coeffs);
            out["t0"] = to_fraction(p.t0);
            return out;
          },
          py::arg("cls"), py::arg("ample") = py::none())
      .def(
          "inscribed_simplex_size",
          [](const PyBody& b, py::handle cls) {
            return to_fraction(inscribed_simplex_size(b.body.fiber(vec_from_py(cls))));
          },
          py::arg("cls"))
      .def(
          "sandwich",
          [](const PyBody& b, py::handle cls, py::handle ample, int k_max) {
            SandwichReport rep =
                sandwich_check(b.body, vec_from_py(cls), b.ample_or_default(ample), k_max);
            py::dict out;
            out["t0"] = to_fraction(rep.t0);
            out["eps"] = to_fraction(rep.eps);
            out["translate"] = vec_to_py(rep.translate);
            out["ratio_bound"] = to_fraction(rep.ratio_bound);
            py::list samples;
            for (const SandwichSample& s : rep.samples) {
              py::dict e;
              e["t"] = to_fraction(s.t);
              e["inner_ok"] = s.inner_ok;
              e["outer_dist"] = to_fraction(s.outer_dist);
              e["ratio"] = to_fraction(s.ratio);
              samples.append(e);
            }
            out["samples"] = samples;
            out["ok"] = rep.ok;
            return out;
          },
          py::arg("cls"), py::arg("ample") = py::none(), py::arg("k_max") = 4)
      .def(
          "rho_bound",
          [](const PyBody& b, py::handle cls, int count, std::uint64_t seed) {
            RhoReport rep = rho_bound_estimate(b.body, vec_from_py(cls), count, seed);
            py::dict out;
            out["max_ratio"] = to_fraction(rep.max_ratio);
            out["samples"] = rep.samples;
            out["scale_invariant"] = rep.scale_invariant;
            return out;
          },
          py::arg("cls"), py::arg("count") = 100, py::arg("seed") = 0);

  m.def(
      "parse_instance",
      [](const std::string& text) {
        auto parsed = parse_instance(text);
        return PyBody{std::move(parsed.first), std::move(parsed.second)};
      },
      py::arg("text"), "parse instance JSON text into a validated Body");

  m.def(
      "generate_instance",
      [](const std::string& family, std::uint64_t seed, int n, int rho, long long scale,
         int ray_count, int max_coeff) {
        GenParams p;
        p.n = n;
        p.rho = rho;
        p.scale = scale;
        p.ray_count = ray_count;
        p.max_coeff = max_coeff;
        return instance_to_json(generate_instance(family, p, seed));
      },
      py::arg("family"), py::arg("seed") = 0, py::arg("n") = 2, py::arg("rho") = 2,
      py::arg("scale") = 1, py::arg("ray_count") = 6, py::arg("max_coeff") = 4,
      "generate an instance and return its JSON text");

  m.def(
      "run_suite",
      [](const std::vector<std::string>& texts, int samples, int pairs, std::uint64_t seed,
         int jobs) {
        std::vector<InstanceData> list;
        for (const std::string& t : texts) list.push_back(parse_instance_text(t));
        SuiteOptions opts;
        opts.samples_per_instance = samples;
        opts.pairs_per_instance = pairs;
        opts.seed = seed;
        opts.jobs = jobs;
        return suite_json(run_suite(list, opts));
      },
      py::arg("texts"), py::arg("samples") = 100, py::arg("pairs") = 50, py::arg("seed") = 42,
      py::arg("jobs") = 1, "run the property suite over instance JSON texts, returns the report");
}
