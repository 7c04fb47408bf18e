#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "m1n/certify.hpp"
#include "m1n/chow.hpp"
#include "m1n/cli.hpp"
#include "m1n/corpus.hpp"
#include "m1n/gluing.hpp"
#include "m1n/gonal.hpp"
#include "m1n/report.hpp"

namespace py = pybind11;
using nlohmann::json;

// Values cross the boundary as JSON text in the file formats of the CLI;
// the Python package decodes them.

namespace {

json parse(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw m1n::ParseError(e.what());
  }
}

std::string scalar_text(const m1n::Scalar &s) { return m1n::scalar_to_json(s).dump(); }

} // namespace

PYBIND11_MODULE(_m1n, m) {
  m.doc() = "Exact divisor-class computations on M-bar_{1,n} and M-bar_g";

  auto base = py::register_exception<m1n::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<m1n::MarkingIndexError>(m, "MarkingIndexError", base.ptr());
  py::register_exception<m1n::SpaceMismatchError>(m, "SpaceMismatchError", base.ptr());
  py::register_exception<m1n::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<m1n::ResourceGuardError>(m, "ResourceGuardError", base.ptr());
  py::register_exception<m1n::IntegralityError>(m, "IntegralityError", base.ptr());
  py::register_exception<m1n::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<m1n::IncompletePremise>(m, "IncompletePremise", base.ptr());
  py::register_exception<m1n::CertificateRefused>(m, "CertificateRefused", base.ptr());

  m.def("glue_pullback", [](const std::string &w, int m_pairs) {
    return to_json(m1n::glue_pullback(m1n::class_mg_from_json(parse(w)), m_pairs)).dump();
  }, py::arg("w"), py::arg("m"));
  m.def("forget_pullback", [](const std::string &w, int n) {
    return to_json(m1n::forget_pullback(m1n::class_m1n_from_json(parse(w)), n)).dump();
  }, py::arg("w"), py::arg("n"));
  m.def("pair", [](const std::string &profile, const std::string &cls) {
    return scalar_text(m1n::pair(m1n::profile_from_json(parse(profile)),
                                 m1n::class_m1n_from_json(parse(cls))));
  }, py::arg("profile"), py::arg("cls"));
  m.def("normalize", [](const std::string &cls) {
    return to_json(m1n::class_m1n_from_json(parse(cls))).dump();
  }, py::arg("cls"));

  m.def("export_item", [](const std::string &name) { return m1n::cli::export_item(name).dump(); },
        py::arg("name"));

  m.def("pairing_direct", [](int d, int cap) { return m1n::pairing_direct(d, cap).str(); },
        py::arg("d"), py::arg("cap") = m1n::kDefaultDirectMaxD);
  m.def("pairing_binomial", [](int d) { return m1n::pairing_binomial(d).str(); }, py::arg("d"));
  m.def("pairing_closed", [](int d) { return m1n::pairing_closed(d).str(); }, py::arg("d"));

  m.def("certify", [](const std::string &divisor, int m_pairs, const std::string &profile,
                      bool irreducible) {
    auto assertions = m1n::standard_assertions();
    if (irreducible)
      assertions.push_back(m1n::Assertion::MainComponentIrreducible);
    return to_json(m1n::certify("custom", m1n::class_mg_from_json(parse(divisor)), m_pairs,
                                "custom", m1n::profile_from_json(parse(profile)), assertions))
        .dump();
  }, py::arg("divisor"), py::arg("m"), py::arg("profile"), py::arg("irreducible") = false);

  m.def("verify", [](const std::string &section, int max_d, int direct_max_d) {
    m1n::VerifyOptions opts;
    opts.max_d = max_d;
    opts.direct_max_d = direct_max_d;
    const auto rows = m1n::verify_section(section, opts);
    return py::make_tuple(m1n::all_pass(rows),
                          m1n::emit_report(rows, m1n::ReportFormat::Json));
  }, py::arg("section") = "all", py::arg("max_d") = 12, py::arg("direct_max_d") = 6);

  m.def("run_cli", [](const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = m1n::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
