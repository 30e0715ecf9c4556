#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "cli.hpp"
#include "oalgdim/dimcalc.hpp"
#include "oalgdim/kl.hpp"

namespace py = pybind11;
using namespace oalgdim;

using PyDatum = std::shared_ptr<RootDatum>;

namespace {

py::int_ to_py(const Integer& value) {
  const std::string digits = value.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

// rationals cross the boundary as "a/b" strings
py::list to_py(const RationalVector& values) {
  py::list out;
  for (const auto& v : values) out.append(to_string(v));
  return out;
}

RationalVector from_py(const std::vector<std::string>& coords) {
  RationalVector out;
  for (const auto& c : coords) out.push_back(parse_rational(c));
  return out;
}

Weight make_weight(const PyDatum& datum, const std::vector<std::string>& coords) {
  return Weight(datum, from_py(coords));
}

py::dict goldie_dict(const GoldieReport& g) {
  py::dict out;
  out["w"] = g.w.to_string();
  out["m"] = g.m;
  out["dim"] = g.dim;
  out["num_pos_roots"] = g.num_pos_roots;
  out["exponents"] = g.certificate.exponents;
  out["coefficient"] = to_py(g.certificate.coefficient);
  return out;
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int i : v) out.push_back(i + 1);
  return out;
}

}  // namespace

PYBIND11_MODULE(_oalgdim, m) {
  m.doc() = "Canonical dimensions of locally analytic representations";
  m.attr("__version__") = OALGDIM_VERSION;

  static py::exception<Error> error_type(m, "OalgdimError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string kind(to_string(e.kind()));
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(kind + ": " + e.what());
      exc.attr("kind") = kind;
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<RootDatum, PyDatum>(m, "RootDatum")
      .def_property_readonly("series", [](const RootDatum& d) { return to_string(d.series()); })
      .def_property_readonly("rank", &RootDatum::rank)
      .def_property_readonly("semisimple_rank", &RootDatum::semisimple_rank)
      .def_property_readonly("orientation", [](const RootDatum& d) { return to_string(d.orientation()); })
      .def_property_readonly("fingerprint", &RootDatum::fingerprint)
      .def_property_readonly("coxeter_name", &RootDatum::coxeter_name)
      .def_property_readonly("weyl_order", &RootDatum::weyl_order)
      .def_property_readonly("num_pos_roots", &RootDatum::num_pos_roots)
      .def_property_readonly("cartan", &RootDatum::cartan)
      .def_property_readonly("simple_roots", &RootDatum::simple_roots)
      .def_property_readonly("rho", [](const RootDatum& d) { return to_py(d.rho()); })
      .def_property_readonly("t", [](const RootDatum& d) { return to_py(d.t_vec()); })
      .def_property_readonly("positive_roots",
                             [](const RootDatum& d) {
                               std::vector<IntVector> out;
                               for (const auto& r : d.positive_roots()) out.push_back(r.ambient);
                               return out;
                             })
      .def("__repr__", [](const RootDatum& d) { return "<RootDatum " + d.fingerprint() + ">"; });

  m.def(
      "root_datum",
      [](const std::string& series, int rank, const std::string& orientation, std::uint64_t cap) {
        return std::const_pointer_cast<RootDatum>(
            build_root_datum(parse_series(series), rank, parse_orientation(orientation), cap));
      },
      py::arg("series"), py::arg("rank"), py::arg("orientation") = "upper", py::arg("cap") = kDefaultGroupCap);

  py::class_<WeylElement>(m, "WeylElement")
      .def_property_readonly("length", &WeylElement::length)
      .def_property_readonly("word", [](const WeylElement& w) { return w.reduced_word(); })
      .def_property_readonly("datum", [](const WeylElement& w) { return std::const_pointer_cast<RootDatum>(w.datum()); })
      .def("inverse", &WeylElement::inverse)
      .def("__mul__", [](const WeylElement& a, const WeylElement& b) { return a * b; })
      .def("__eq__", [](const WeylElement& a, const WeylElement& b) { return a == b; })
      .def("__str__", &WeylElement::to_string)
      .def("__repr__", [](const WeylElement& w) { return "<WeylElement " + w.to_string() + ">"; });

  m.def(
      "element",
      [](const PyDatum& datum, const std::vector<int>& word) { return WeylElement::from_word(datum, word); },
      py::arg("datum"), py::arg("word"), "Element from a 0-based word.");
  m.def(
      "parse_element",
      [](const PyDatum& datum, const std::string& text) {
        return WeylElement::from_word(datum, parse_word(*datum, text));
      },
      py::arg("datum"), py::arg("text"), "Element from a 1-based comma-separated word such as '2,1'.");
  m.def("longest_element", [](const PyDatum& datum) { return longest_element(datum); });
  m.def("enumerate_group", [](const PyDatum& d) { return enumerate_group(d); });
  m.def("bruhat_leq", &bruhat_leq);

  m.def("kl_poly", [](const WeylElement& x, const WeylElement& w) { return to_py(kl_poly(x, w).coeffs()); });
  m.def("a_coeffs", [](const WeylElement& w) {
    py::list out;
    for (const auto& [y, a] : a_coeffs(w).entries) out.append(py::make_tuple(y, to_py(a)));
    return out;
  });
  m.def(
      "goldie_degree",
      [](const WeylElement& w, std::optional<std::vector<std::string>> t) {
        return goldie_dict(t ? goldie_degree(w, from_py(*t)) : goldie_degree(w));
      },
      py::arg("w"), py::arg("t") = py::none());
  m.def("goldie_profile", [](const PyDatum& d) { return goldie_profile(d); });

  m.def("dot_dominant", [](const PyDatum& d, const std::vector<std::string>& c) {
    return dot_dominant(make_weight(d, c));
  });
  m.def("dominant_conjugate", [](const PyDatum& d, const std::vector<std::string>& c) {
    const auto conj = dominant_conjugate(make_weight(d, c));
    py::dict out;
    out["mu"] = to_py(conj.mu.coords());
    out["w"] = conj.w;
    out["singular"] = one_based(conj.singular);
    return out;
  });
  m.def("dim_simple", [](const PyDatum& d, const std::vector<std::string>& c) {
    const auto rep = dim_simple_hw(make_weight(d, c));
    py::dict out = goldie_dict(rep.goldie);
    out["dim"] = rep.dim;
    out["mu"] = to_py(rep.mu.coords());
    out["singular"] = one_based(rep.singular);
    return out;
  });
  m.def("dim_parabolic_induction", [](const PyDatum& d, const std::vector<int>& levi) {
    return dim_parabolic_induction(*d, levi);
  });
  m.def("dim_bounds", [](const PyDatum& d, int p) {
    const auto b = dim_bounds(*d, p);
    py::dict out;
    out["r_min"] = b.r_min;
    out["upper"] = b.upper;
    out["hypothesis_warnings"] = b.hypothesis_warnings;
    return out;
  });
  m.def(
      "gl2_trianguline_dim",
      [](const std::string& kind, const std::string& delta1, const std::string& delta2, const std::string& line) {
        TrianguParam param{delta1, delta2, TrianguCase::Generic, line};
        if (kind == "special") {
          param.kind = TrianguCase::Special;
        } else if (kind != "generic") {
          fail(ErrorKind::InvalidArgument, "case must be 'generic' or 'special'");
        }
        const auto rep = gl2_trianguline_dim(param);
        py::dict out;
        out["dim"] = rep.dim;
        out["upper_bound"] = rep.upper_bound;
        py::list constituents;
        for (const auto& c : rep.constituents) constituents.append(py::make_tuple(c.name, c.dim));
        out["constituents"] = constituents;
        return out;
      },
      py::arg("kind") = "generic", py::arg("delta1") = "delta1", py::arg("delta2") = "delta2", py::arg("L") = "L");
  m.def(
      "drinfeld_dim",
      [](int d, int r, int s, const std::string& pairing, const std::string& orientation) {
        DrinfeldConfig config{parse_step_pairing(pairing), parse_orientation(orientation), true};
        const auto rep = drinfeld_dim(d, r, s, config);
        py::dict out;
        out["dim"] = rep.dim;
        out["i0"] = rep.i0;
        out["min_m"] = rep.min_m;
        out["num_pos_roots"] = rep.num_pos_roots;
        py::list steps;
        for (const auto& step : rep.steps) {
          py::dict sd;
          sd["j"] = step.j;
          sd["mu"] = to_py(step.mu.coords());
          sd["z"] = step.z.to_string();
          sd["dominant"] = to_py(step.dominant.coords());
          sd["v"] = step.v.to_string();
          sd["singular"] = one_based(step.singular);
          sd["m"] = step.goldie.m;
          steps.append(sd);
        }
        out["steps"] = steps;
        return out;
      },
      py::arg("d"), py::arg("r"), py::arg("s"), py::arg("pairing") = "lagged", py::arg("orientation") = "upper");

  m.def("save_cache", [](const PyDatum& d, const std::filesystem::path& p) { save_cache(*KLEngine::of(d), p); });
  m.def("load_cache", [](const PyDatum& d, const std::filesystem::path& p) { load_cache(*KLEngine::of(d), p); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
