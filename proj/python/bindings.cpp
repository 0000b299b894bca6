#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "harris/distribution.hpp"
#include "harris/error.hpp"
#include "harris/estimation.hpp"
#include "harris/moments.hpp"
#include "harris/rng.hpp"
#include "harris/sampling.hpp"
#include "harris/stability.hpp"

namespace py = pybind11;
using namespace harris;

namespace {

Variant parse_variant(const std::string& v) {
  if (v == "h1") return Variant::H1;
  if (v == "h0") return Variant::H0;
  throw Error(Errc::invalid_parameter, "variant must be h1 or h0, got " + v);
}

HarrisParams params_of(double m, double k, const std::string& variant) {
  return make_params(m, k, parse_variant(variant));
}

py::dict fit_dict(const FitResult& fit) {
  py::dict out;
  out["method"] = fit.method == FitMethod::mle ? "mle" : "moments";
  out["m_hat"] = fit.m_hat;
  out["k_hat"] = fit.k_hat;
  out["k_hat_int"] = fit.k_hat_int;
  if (fit.solver) {
    out["iterations"] = fit.solver->iterations;
    out["residual"] = fit.solver->residual;
  }
  return out;
}

using Sampler = std::vector<SupportPoint> (*)(const HarrisParams&, RngStream&, std::size_t);

Sampler sampler_of(const std::string& name) {
  if (name == "nb") return sample_nb;
  if (name == "gamma-poisson") return sample_gamma_poisson;
  if (name == "inverse") return sample_inverse;
  throw Error(Errc::invalid_parameter, "unknown sampler " + name);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  // Lives as long as the module; the translator only borrows it.
  static PyObject* harris_error = PyErr_NewException("harris._core.HarrisError", PyExc_ValueError, nullptr);
  mod.add_object("HarrisError", py::handle(harris_error));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(harris_error)(e.what());
      py::setattr(exc, "code", py::str(std::string(to_string(e.code()))));
      PyErr_SetObject(harris_error, exc.ptr());
    }
  });

  mod.def(
      "pmf",
      [](double m, double k, std::int64_t x, const std::string& variant) {
        const auto params = params_of(m, k, variant);
        const auto r = lattice_index(params, x);
        return r ? pmf(params, *r) : 0.0;
      },
      py::arg("m"), py::arg("k"), py::arg("x"), py::arg("variant") = "h1");

  mod.def(
      "pmf_table",
      [](double m, double k, std::int64_t rmax, const std::string& variant) {
        std::vector<std::pair<std::int64_t, double>> rows;
        for (const auto& e : pmf_table(params_of(m, k, variant), rmax)) rows.emplace_back(e.point.x, e.probability);
        return rows;
      },
      py::arg("m"), py::arg("k"), py::arg("rmax"), py::arg("variant") = "h1");

  mod.def(
      "cdf", [](double m, double k, double x, const std::string& variant) { return cdf(params_of(m, k, variant), x); },
      py::arg("m"), py::arg("k"), py::arg("x"), py::arg("variant") = "h1");

  mod.def(
      "quantile",
      [](double m, double k, double u, const std::string& variant) { return quantile(params_of(m, k, variant), u).x; },
      py::arg("m"), py::arg("k"), py::arg("u"), py::arg("variant") = "h1");

  mod.def(
      "pgf", [](double m, double k, double s, const std::string& variant) { return pgf(params_of(m, k, variant), s); },
      py::arg("m"), py::arg("k"), py::arg("s"), py::arg("variant") = "h1");

  mod.def(
      "moments",
      [](double m, double k, const std::string& variant) {
        const MomentSet ms = moments(params_of(m, k, variant));
        py::dict out;
        out["mean"] = ms.raw[0];
        out["variance"] = ms.central[1];
        out["raw"] = ms.raw;
        out["central"] = ms.central;
        out["factorial"] = ms.factorial;
        out["cumulants"] = ms.cumulants;
        out["beta1"] = ms.beta1;
        out["beta2"] = ms.beta2;
        out["gamma1"] = ms.gamma1;
        out["gamma2"] = ms.gamma2;
        out["cv"] = ms.cv;
        return out;
      },
      py::arg("m"), py::arg("k"), py::arg("variant") = "h1");

  mod.def(
      "sample",
      [](double m, double k, std::size_t n, std::uint64_t seed, std::uint64_t stream, const std::string& variant,
         const std::string& sampler) {
        RngStream rng(seed, stream);
        return values_of(sampler_of(sampler)(params_of(m, k, variant), rng, n));
      },
      py::arg("m"), py::arg("k"), py::arg("n"), py::arg("seed") = 0, py::arg("stream") = 0,
      py::arg("variant") = "h1", py::arg("sampler") = "nb");

  mod.def(
      "fit",
      [](std::vector<std::int64_t> values, const std::string& method, int origin) {
        const Sample sample(std::move(values), origin);
        if (method == "mle") return fit_dict(fit_mle(sample));
        if (method == "moments") return fit_dict(fit_moments(sample));
        throw Error(Errc::invalid_parameter, "method must be mle or moments, got " + method);
      },
      py::arg("values"), py::arg("method") = "mle", py::arg("origin") = 1);

  mod.def(
      "id_check",
      [](double m, double k, int n, std::size_t order) {
        const auto c = id_check(make_params(m, k, Variant::H0), n, order);
        return py::make_tuple(c.pass, c.min_coefficient, c.witness);
      },
      py::arg("m"), py::arg("k"), py::arg("n"), py::arg("order") = 60);

  mod.def(
      "sd_check",
      [](double m, double k, double c, std::size_t order, const std::string& variant) {
        const auto r = sd_check(params_of(m, k, variant), c, order);
        return py::make_tuple(r.pass, r.min_coefficient, r.witness);
      },
      py::arg("m"), py::arg("k"), py::arg("c"), py::arg("order") = 60, py::arg("variant") = "h0");

  mod.def(
      "gamma_harris_identity",
      [](double a, double c, std::int64_t k, const std::vector<double>& t) { return gamma_harris_identity(a, c, k, t); },
      py::arg("a"), py::arg("c"), py::arg("k"), py::arg("t"));
}
