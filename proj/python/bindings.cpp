#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "wci/encoding.hpp"
#include "wci/errors.hpp"
#include "wci/family.hpp"
#include "wci/hilbert.hpp"
#include "wci/report.hpp"
#include "wci/verify.hpp"

namespace py = pybind11;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
std::string dump(const nlohmann::json& j) { return j.dump(); }

py::int_ to_py(const wci::BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

wci::SearchBounds bounds_from(const py::dict& d, wci::SearchBounds base) {
  const auto take = [&](const char* key, wci::Int& field) {
    if (d.contains(key)) field = d[key].cast<wci::Int>();
  };
  take("min_codim", base.min_codim);
  take("max_codim", base.max_codim);
  take("min_vars", base.min_vars);
  take("max_vars", base.max_vars);
  take("max_weight", base.max_weight);
  take("max_degree", base.max_degree);
  return base;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted complete intersection toolkit";

  py::register_exception<wci::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<wci::DomainError>(m, "DomainError", PyExc_ArithmeticError);

  m.def("gcd_many", [](const std::vector<wci::Int>& v) { return wci::gcd_many(v); });
  m.def("factorize", [](wci::Int n) {
    std::vector<std::pair<wci::Int, wci::Int>> out;
    for (const auto& pp : wci::factorize(n)) out.emplace_back(pp.prime, pp.exponent);
    return out;
  });
  m.def("representable", [](wci::Int t, const std::vector<wci::Int>& g) { return wci::representable(t, g); });
  m.def("monomial_count", [](wci::Int t, const std::vector<wci::Int>& w) { return to_py(wci::monomial_count(t, w)); });
  m.def("frobenius", [](const std::vector<wci::Int>& g) { return wci::frobenius(g); });
  m.def("brauer_bound", [](const std::vector<wci::Int>& g) { return wci::brauer_bound(g); });
  m.def("brauer_bound_min", [](const std::vector<wci::Int>& g) { return wci::brauer_bound_min(g); });

  m.def("pair_report_json", [](const std::string& pair, wci::Int h, std::optional<wci::Int> prime) {
    return dump(wci::pair_report_to_json(wci::parse_pair(pair), h, prime));
  }, py::arg("pair"), py::arg("h") = 1, py::arg("prime") = py::none());
  m.def("delta", [](const std::string& pair) { return wci::delta(wci::parse_pair(pair)); });
  m.def("is_h_regular", [](const std::string& pair, wci::Int h) { return wci::is_h_regular(wci::parse_pair(pair), h).regular; },
        py::arg("pair"), py::arg("h") = 1);
  m.def("cancel", [](const std::string& pair) { return wci::encode_pair(wci::cancel(wci::parse_pair(pair))); });

  m.def("check_json", [](const std::string& family) {
    const auto f = wci::parse_family(family);
    return dump(wci::analysis_to_json(f, wci::analyze(f)));
  });
  m.def("quasi_smooth", [](const std::string& family) { return wci::quasi_smooth(wci::parse_family(family)).verdict; });
  m.def("wci_well_formed", [](const std::string& family) { return wci::wci_well_formed(wci::parse_family(family)); });
  m.def("fundamental_index", [](const std::string& family) { return wci::fundamental_index(wci::parse_family(family)).index; });
  m.def("is_smooth", [](const std::string& family) { return wci::is_smooth(wci::parse_family(family)); });
  m.def("base_locus_json", [](const std::string& family, wci::Int ell) {
    const auto f = wci::parse_family(family);
    return dump(wci::base_locus_to_json(f, ell, wci::base_locus(f, ell)));
  });
  m.def("augment", [](const std::string& family, wci::Int ell) {
    return wci::encode_family(wci::augment(wci::parse_family(family), ell));
  });
  m.def("h0", [](const std::string& family, wci::Int k) {
    const auto count = wci::h0(wci::parse_family(family), k);
    return py::make_tuple(to_py(count.value), count.formal);
  });

  m.def("verify_json", [](const std::string& claim, const py::dict& bounds, std::optional<wci::Int> prime, unsigned workers,
                          bool timing) {
    const auto c = wci::parse_claim(claim);
    const auto b = bounds_from(bounds, wci::default_bounds(c));
    wci::VerifyReport report;
    {
      py::gil_scoped_release release;
      report = wci::run_claim(c, b, prime, {workers, std::nullopt});
    }
    return dump(wci::verify_to_json(report, timing));
  }, py::arg("claim"), py::arg("bounds") = py::dict(), py::arg("prime") = py::none(), py::arg("workers") = 0,
        py::arg("timing") = true);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = wci::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
