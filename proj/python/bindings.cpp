// Python bindings for the bhhl core library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bhhl/constants.hpp"
#include "bhhl/errors.hpp"
#include "bhhl/exponents.hpp"
#include "bhhl/extended_real.hpp"
#include "bhhl/field.hpp"
#include "bhhl/khinchine.hpp"
#include "bhhl/norms.hpp"
#include "bhhl/scalar_kernel.hpp"
#include "bhhl/search.hpp"
#include "bhhl/tensor.hpp"

namespace py = pybind11;

namespace {

bhhl::ExtendedReal extended_from_double(double v) {
  if (std::isinf(v) && v > 0) {
    return bhhl::ExtendedReal::infinity();
  }
  return bhhl::ExtendedReal::finite(v);
}

}  // namespace

PYBIND11_MODULE(bhhl, mod) {
  mod.doc() =
      "Bohnenblust-Hille / Hardy-Littlewood inequality constants: bound "
      "formulas, exponent interpolation, and numerical verification.";

  py::register_exception<bhhl::admissibility_error>(mod, "AdmissibilityError",
                                                    PyExc_ValueError);
  py::register_exception<bhhl::tensor_format_error>(mod, "TensorFormatError",
                                                    PyExc_ValueError);
  py::register_exception<bhhl::cap_exceeded_error>(mod, "CapExceededError",
                                                   PyExc_RuntimeError);

  py::enum_<bhhl::ScalarField>(mod, "ScalarField")
      .value("REAL", bhhl::ScalarField::REAL)
      .value("COMPLEX", bhhl::ScalarField::COMPLEX);

  py::class_<bhhl::ExtendedReal>(mod, "ExtendedReal")
      .def(py::init(&extended_from_double), py::arg("value"),
           "A positive real; float('inf') gives the infinite exponent.")
      .def(py::init([](const std::string& tok) { return bhhl::ExtendedReal::parse(tok); }),
           py::arg("token"))
      .def_static("infinity", &bhhl::ExtendedReal::infinity)
      .def_property_readonly("is_infinite", &bhhl::ExtendedReal::is_infinite)
      .def("value", &bhhl::ExtendedReal::value)
      .def("__repr__", [](const bhhl::ExtendedReal& p) { return "ExtendedReal(" + p.str() + ")"; })
      .def("__str__", &bhhl::ExtendedReal::str);
  py::implicitly_convertible<py::float_, bhhl::ExtendedReal>();
  py::implicitly_convertible<py::int_, bhhl::ExtendedReal>();
  py::implicitly_convertible<py::str, bhhl::ExtendedReal>();

  mod.def("gamma_fn", &bhhl::gamma_fn, py::arg("x"), "Gamma(x) for x > 0.");
  mod.def("log_gamma", &bhhl::log_gamma, py::arg("x"));
  mod.def("euler_gamma", &bhhl::euler_gamma);
  mod.def("solve_q0", [] { return bhhl::solve_q0(); },
          "Crossover exponent of the real Khinchine constant formulas.");

  mod.def("khinchine_a", &bhhl::khinchine_a, py::arg("q"), py::arg("field"));
  mod.def("khinchine_a_inv_bh", &bhhl::khinchine_a_inv_bh, py::arg("j"), py::arg("field"));

  py::class_<bhhl::BoundReport>(mod, "BoundReport")
      .def_readonly("value", &bhhl::BoundReport::value)
      .def_property_readonly("formula_id",
                             [](const bhhl::BoundReport& r) { return bhhl::to_string(r.formula_id); })
      .def_readonly("field", &bhhl::BoundReport::field)
      .def_readonly("m", &bhhl::BoundReport::m)
      .def_readonly("p", &bhhl::BoundReport::p)
      .def_readonly("valid", &bhhl::BoundReport::valid)
      .def_readonly("note", &bhhl::BoundReport::note)
      .def_readonly("formula", &bhhl::BoundReport::formula)
      .def("__repr__", [](const bhhl::BoundReport& r) {
        return "BoundReport(" + bhhl::to_string(r.formula_id) + ", " + std::to_string(r.value) +
               (r.valid ? "" : ", valid=False") + ")";
      });

  mod.def("bh_upper", &bhhl::bh_upper, py::arg("m"), py::arg("field"));
  mod.def("bh_envelope", &bhhl::bh_envelope, py::arg("m"), py::arg("field"));
  mod.def("bh_lower_real", &bhhl::bh_lower_real, py::arg("m"));
  mod.def("hl_upper_sqrt2", &bhhl::hl_upper_sqrt2, py::arg("m"));
  mod.def("hl_upper_p_dependent", &bhhl::hl_upper_p_dependent, py::arg("m"), py::arg("p"),
          py::arg("field"));
  mod.def("hl_threshold", &bhhl::hl_threshold, py::arg("m"));
  mod.def("hl_upper_p_free", &bhhl::hl_upper_p_free, py::arg("m"), py::arg("p"), py::arg("field"));
  mod.def("hl_upper_best", &bhhl::hl_upper_best, py::arg("m"), py::arg("p"), py::arg("field"));
  mod.def("hl_lower_real", &bhhl::hl_lower_real, py::arg("m"), py::arg("p"));

  py::class_<bhhl::MultiExponent>(mod, "MultiExponent")
      .def(py::init<std::vector<double>>(), py::arg("q"))
      .def_property_readonly("m", &bhhl::MultiExponent::m)
      .def_property_readonly("values", &bhhl::MultiExponent::values)
      .def("max_q", &bhhl::MultiExponent::max_q)
      .def("__len__", &bhhl::MultiExponent::m)
      .def("__getitem__", [](const bhhl::MultiExponent& q, int i) {
        if (i < 0 || i >= q.m()) {
          throw py::index_error();
        }
        return q[i];
      });
  py::implicitly_convertible<py::list, bhhl::MultiExponent>();
  py::implicitly_convertible<py::tuple, bhhl::MultiExponent>();

  py::class_<bhhl::InterpolationDecomposition>(mod, "InterpolationDecomposition")
      .def_readonly("s", &bhhl::InterpolationDecomposition::s)
      .def_readonly("lambda_", &bhhl::InterpolationDecomposition::lambda)
      .def_readonly("thetas", &bhhl::InterpolationDecomposition::thetas)
      .def_readonly("vertices", &bhhl::InterpolationDecomposition::vertices)
      .def_readonly("p", &bhhl::InterpolationDecomposition::p);

  py::enum_<bhhl::SumMode>(mod, "SumMode")
      .value("EQUALITY", bhhl::SumMode::EQUALITY)
      .value("INEQUALITY", bhhl::SumMode::INEQUALITY);

  mod.def("hl_critical_exponent", &bhhl::hl_critical_exponent, py::arg("m"), py::arg("p"));
  mod.def("bh_admissible", &bhhl::bh_admissible, py::arg("q"), py::arg("tol") = 1e-9);
  mod.def("hl_admissible", &bhhl::hl_admissible, py::arg("q"), py::arg("p"),
          py::arg("tol") = 1e-9, py::arg("mode") = bhhl::SumMode::EQUALITY);
  mod.def("lambda_0", &bhhl::lambda_0, py::arg("m"), py::arg("s"));
  mod.def("lambda_m", &bhhl::lambda_m, py::arg("m"), py::arg("p"), py::arg("s"));
  mod.def("lambda_ladder", &bhhl::lambda_ladder, py::arg("m"), py::arg("p"), py::arg("s"));
  mod.def("max_q_threshold", &bhhl::max_q_threshold, py::arg("m"));
  mod.def("interpolation_weights", &bhhl::interpolation_weights, py::arg("q"), py::arg("p"),
          py::arg("s") = std::nullopt, py::arg("tol") = 1e-9);
  mod.def("gen_bh_upper", &bhhl::gen_bh_upper, py::arg("q"), py::arg("field"),
          py::arg("tol") = 1e-9);
  mod.def("gen_bh_upper_prior", &bhhl::gen_bh_upper_prior, py::arg("q"), py::arg("tol") = 1e-9);
  mod.def("gen_hl_upper", &bhhl::gen_hl_upper, py::arg("q"), py::arg("p"), py::arg("field"),
          py::arg("tol") = 1e-9);

  py::class_<bhhl::CoefficientTensor>(mod, "CoefficientTensor")
      .def(py::init<int, int, bhhl::ScalarField, std::vector<std::complex<double>>>(),
           py::arg("m"), py::arg("n"), py::arg("field"), py::arg("entries"))
      .def_static("real_tensor", &bhhl::CoefficientTensor::real_tensor, py::arg("m"),
                  py::arg("n"), py::arg("entries"))
      .def_property_readonly("m", &bhhl::CoefficientTensor::m)
      .def_property_readonly("n", &bhhl::CoefficientTensor::n)
      .def_property_readonly("field", &bhhl::CoefficientTensor::field)
      .def_property_readonly("entries", &bhhl::CoefficientTensor::entries)
      .def("real_entries", &bhhl::CoefficientTensor::real_entries)
      .def("to_json", &bhhl::CoefficientTensor::to_json)
      .def_static("from_json", &bhhl::CoefficientTensor::from_json, py::arg("text"))
      .def_static("load", &bhhl::CoefficientTensor::load, py::arg("path"))
      .def("save", &bhhl::CoefficientTensor::save, py::arg("path"));

  py::class_<bhhl::NormEstimate>(mod, "NormEstimate")
      .def_readonly("value", &bhhl::NormEstimate::value)
      .def_property_readonly("kind",
                             [](const bhhl::NormEstimate& e) { return bhhl::to_string(e.kind); })
      .def_readonly("method", &bhhl::NormEstimate::method)
      .def_readonly("iterations", &bhhl::NormEstimate::iterations)
      .def_readonly("seed", &bhhl::NormEstimate::seed)
      .def("__repr__", [](const bhhl::NormEstimate& e) {
        return "NormEstimate(" + std::to_string(e.value) + ", " + bhhl::to_string(e.kind) + ")";
      });

  py::class_<bhhl::RatioCertificate>(mod, "RatioCertificate")
      .def_readonly("ratio", &bhhl::RatioCertificate::ratio)
      .def_readonly("mixed", &bhhl::RatioCertificate::mixed)
      .def_readonly("denominator", &bhhl::RatioCertificate::denominator);

  mod.def("mixed_norm",
          py::overload_cast<const bhhl::CoefficientTensor&, const bhhl::MultiExponent&>(
              &bhhl::mixed_norm),
          py::arg("t"), py::arg("q"));
  mod.def("sup_norm_exact_real_linf", &bhhl::sup_norm_exact_real_linf, py::arg("t"),
          py::arg("cap") = bhhl::kDefaultEnumerationCap);
  mod.def("sup_norm_upper_holder", &bhhl::sup_norm_upper_holder, py::arg("t"), py::arg("p"));
  mod.def(
      "sup_norm_ascent",
      [](const bhhl::CoefficientTensor& t, const bhhl::ExtendedReal& p, int starts,
         int max_sweeps, double rel_tol, std::int64_t seed) {
        bhhl::AscentConfig cfg;
        cfg.starts = starts;
        cfg.max_sweeps = max_sweeps;
        cfg.rel_tol = rel_tol;
        cfg.seed = seed;
        return bhhl::sup_norm_ascent(t, p, cfg);
      },
      py::arg("t"), py::arg("p"), py::arg("starts") = 32, py::arg("max_sweeps") = 500,
      py::arg("rel_tol") = 1e-10, py::arg("seed") = 0);
  mod.def("certified_ratio", &bhhl::certified_ratio, py::arg("t"), py::arg("q"), py::arg("p"),
          py::arg("cap") = bhhl::kDefaultEnumerationCap);
  mod.def("hadamard_block_form", &bhhl::hadamard_block_form, py::arg("m"));

  py::class_<bhhl::SearchResult>(mod, "SearchResult")
      .def_readonly("tensor", &bhhl::SearchResult::tensor)
      .def_readonly("ratio", &bhhl::SearchResult::ratio)
      .def_readonly("iterations", &bhhl::SearchResult::iterations)
      .def_readonly("seed", &bhhl::SearchResult::seed)
      .def_readonly("bound", &bhhl::SearchResult::bound);

  mod.def("search_extremal", &bhhl::search_extremal, py::arg("m"), py::arg("n"), py::arg("p"),
          py::arg("q"), py::arg("iters") = 10000, py::arg("seed") = 0,
          py::arg("cap") = bhhl::kDefaultEnumerationCap);
}
