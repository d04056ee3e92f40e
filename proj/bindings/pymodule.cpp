// Python bindings for the core operations: construction, isotropy, polarity,
// quotient geometry, Coxeter checks and the table-verification pipeline.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sphereq/coxeter.hpp"
#include "sphereq/geometry.hpp"
#include "sphereq/polarity.hpp"
#include "sphereq/report.hpp"
#include "sphereq/rng.hpp"

namespace py = pybind11;
using namespace sphereq;

namespace {

py::dict witness_dict(const StratumWitness& w) {
  py::dict d;
  d["iso_dim"] = w.iso_dim;
  d["orbit_dim"] = w.orbit_dim;
  d["fixed_dim"] = w.fixed_dim;
  d["codim"] = w.codim;
  d["order"] = w.order;
  return d;
}

Config make_config(std::uint64_t seed, int samples) {
  Config c;
  c.seed = seed;
  c.samples = samples;
  return c;
}

}  // namespace

PYBIND11_MODULE(_sphereq, m) {
  m.doc() = "numerical verification of isometric sphere quotients";

  py::register_exception<InvalidParameter>(m, "InvalidParameter",
                                           PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError",
                                         PyExc_RuntimeError);
  py::register_exception<NotACorner>(m, "NotACorner", PyExc_RuntimeError);

  py::class_<LieGroupRep>(m, "LieGroupRep")
      .def_readonly("ambient_dim", &LieGroupRep::ambient_dim)
      .def_property_readonly("algebra_dim", &LieGroupRep::algebra_dim)
      .def_property_readonly(
          "generators",
          [](const LieGroupRep& rep) { return rep.generators; })
      .def("bracket_closure_residual", &LieGroupRep::bracket_closure_residual)
      .def("to_json", &LieGroupRep::to_json)
      .def_static("from_json", &LieGroupRep::from_json)
      .def("__repr__", [](const LieGroupRep& rep) {
        std::ostringstream ss;
        ss << "LieGroupRep(ambient_dim=" << rep.ambient_dim
           << ", algebra_dim=" << rep.algebra_dim() << ")";
        return ss.str();
      });

  // Construction
  m.def("build_from_spec_json", [](const std::string& text) {
    return build(GroupSpec::from_json(text));
  });
  m.def("build_classical", [](const std::string& kind, int n) {
    return build_classical(factor_kind_from_string(kind), n);
  });
  m.def("build_spin", &build_spin);
  m.def("build_g2", &build_g2);
  m.def("build_circle_weights", &build_circle_weights);
  m.def("build_torus", &build_torus);
  m.def("doubling", &doubling);
  m.def("direct_sum", &direct_sum);
  m.def("tensor_combine", [](const std::string& field, const LieGroupRep& a,
                             const LieGroupRep& b) {
    return tensor_combine(field_tag_from_string(field), a, b);
  });

  // Registry
  m.def("registry_ids", &registry_ids);
  m.def("build_entry", &build_entry);
  m.def("registry_spec_json",
        [](const std::string& id) { return registry_entry(id).spec.to_json(); });

  // Isotropy and strata
  m.def("cohomogeneity",
        [](const LieGroupRep& rep, std::uint64_t seed) {
          return cohomogeneity(rep, seed);
        },
        py::arg("rep"), py::arg("seed") = 2025);
  m.def("principal_isotropy_dim",
        [](const LieGroupRep& rep, std::uint64_t seed) {
          return static_cast<int>(principal_isotropy(rep, seed).size());
        },
        py::arg("rep"), py::arg("seed") = 2025);
  m.def("isotropy_dims", [](const LieGroupRep& rep, const Vec& p) {
    auto iso = isotropy_algebra(rep, p);
    return py::make_tuple(iso.iso_dim, iso.orbit_dim);
  });
  m.def("slice_representation",
        [](const LieGroupRep& rep, const Vec& p) {
          return slice_representation(rep, p);
        });
  m.def("stratum_witness",
        [](const LieGroupRep& rep, const Vec& p, std::uint64_t seed) {
          return witness_dict(stratum_codim(rep, p, seed));
        },
        py::arg("rep"), py::arg("p"), py::arg("seed") = 2025);
  m.def("find_singular_points",
        [](const LieGroupRep& rep, std::uint64_t seed) {
          py::list out;
          for (const auto& w : find_singular_points(rep, seed))
            out.append(witness_dict(w));
          return out;
        },
        py::arg("rep"), py::arg("seed") = 2025);
  m.def("lrs_reduction",
        [](const LieGroupRep& rep, std::uint64_t seed) {
          auto red = lrs_reduction(rep, seed);
          py::dict d;
          d["rep"] = red.rep;
          d["fixed_dim"] = static_cast<int>(red.fixed_basis.cols());
          d["reduced"] = red.reduced;
          return d;
        },
        py::arg("rep"), py::arg("seed") = 2025);

  // Polarity
  m.def("is_polar",
        [](const LieGroupRep& rep, std::uint64_t seed) {
          auto v = is_polar(rep, seed);
          py::dict d;
          d["verdict"] = to_string(v.verdict);
          d["residual"] = v.residual;
          d["test_points"] = v.test_points;
          return d;
        },
        py::arg("rep"), py::arg("seed") = 2025);
  m.def("is_infinitesimally_polar",
        [](const LieGroupRep& rep, std::uint64_t seed) {
          auto r = is_infinitesimally_polar(rep, seed);
          py::dict d;
          d["verdict"] = to_string(r.verdict);
          d["checked"] = static_cast<int>(r.checks.size());
          if (r.failing_witness)
            d["failing_witness"] = witness_dict(*r.failing_witness);
          return d;
        },
        py::arg("rep"), py::arg("seed") = 2025);

  // Geometry
  m.def("curvature_statistics",
        [](const LieGroupRep& rep, std::uint64_t seed, int samples) {
          auto s = curvature_statistics(rep, seed, samples);
          py::dict d;
          d["min"] = s.min;
          d["max"] = s.max;
          d["mean"] = s.mean;
          d["stddev"] = s.stddev;
          d["samples"] = s.samples;
          return d;
        },
        py::arg("rep"), py::arg("seed") = 2025, py::arg("samples") = 200);
  m.def("oneill_curvature",
        [](const LieGroupRep& rep, const Vec& p, const Vec& x, const Vec& y) {
          return oneill_curvature(rep, p, x, y).curvature;
        });
  m.def("orbit_distance",
        [](const LieGroupRep& rep, const Vec& p, const Vec& q,
           std::uint64_t seed, int restarts) {
          return orbit_distance(rep, p.normalized(), q.normalized(), seed,
                                restarts)
              .distance;
        },
        py::arg("rep"), py::arg("p"), py::arg("q"), py::arg("seed") = 2025,
        py::arg("restarts") = 32);
  m.def("killing_component_norms",
        [](const LieGroupRep& rep, const Mat& xi, const Vec& p) {
          auto [v, h] = killing_component_norms(rep, xi, p);
          return py::make_tuple(v, h);
        });
  m.def("trace_quotient_geodesic",
        [](const LieGroupRep& rep, const Vec& p, const Vec& v, int steps,
           double step_size, std::uint64_t seed) {
          py::list out;
          for (const auto& seg :
               trace_quotient_geodesic(rep, p, v, steps, step_size, seed)) {
            py::dict d;
            d["t_begin"] = seg.t_begin;
            d["t_end"] = seg.t_end;
            d["signature"] = witness_dict(seg.signature);
            out.append(d);
          }
          return out;
        },
        py::arg("rep"), py::arg("p"), py::arg("v"), py::arg("steps") = 64,
        py::arg("step_size") = 0.02, py::arg("seed") = 2025);
  m.def("corner_angle",
        [](const LieGroupRep& rep, const Vec& p, std::uint64_t seed) {
          return corner_angle(rep, p, seed);
        },
        py::arg("rep"), py::arg("p"), py::arg("seed") = 2025);

  // Coxeter
  m.def("complex_from_action",
        [](const LieGroupRep& rep, std::uint64_t seed) {
          return complex_from_action(rep, seed).to_json();
        },
        py::arg("rep"), py::arg("seed") = 2025);
  m.def("check_goodness", [](const std::string& complex_json) {
    auto v = check_goodness(CoxeterComplexData::from_json(complex_json));
    py::dict d;
    d["c1"] = v.c1;
    d["c2"] = v.c2;
    d["verdict"] = to_string(v.verdict);
    d["failing"] = v.failing;
    return d;
  });
  m.def("coxeter_presentation", [](const std::string& complex_json) {
    return coxeter_presentation(CoxeterComplexData::from_json(complex_json))
        .text;
  });

  // Reports
  m.def("verify_entry",
        [](const std::string& id, std::uint64_t seed, int samples) {
          auto r = verify_entry(id, make_config(seed, samples));
          py::dict d;
          d["status"] = to_string(r.status);
          d["json"] = r.json_text;
          return d;
        },
        py::arg("id"), py::arg("seed") = 2025, py::arg("samples") = 0);
  m.def("analyze",
        [](const std::string& spec_json, std::uint64_t seed, int samples) {
          auto r = analyze(GroupSpec::from_json(spec_json),
                           make_config(seed, samples));
          py::dict d;
          d["status"] = to_string(r.status);
          d["json"] = r.json_text;
          return d;
        },
        py::arg("spec_json"), py::arg("seed") = 2025, py::arg("samples") = 0);
  m.def("verify_tables",
        [](std::uint64_t seed, int samples) {
          std::ostringstream out;
          std::string json_text;
          auto status =
              verify_tables(make_config(seed, samples), out, &json_text);
          py::dict d;
          d["status"] = to_string(status);
          d["table"] = out.str();
          d["json"] = json_text;
          return d;
        },
        py::arg("seed") = 2025, py::arg("samples") = 0);
}
