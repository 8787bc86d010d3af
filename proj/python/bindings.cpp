#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lethargy/analyze.hpp"
#include "lethargy/runner.hpp"
#include "lethargy/solve.hpp"
#include "lethargy/witness.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace lethargy;

namespace {

json parse(const std::string& s) {
    try {
        return json::parse(s);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

std::string best_approx_json(const std::string& scheme, const std::string& element, std::size_t n, std::uint64_t seed) {
    ApproximationScheme s = build_scheme(parse(scheme));
    Element x = element_from_config(s, parse(element));
    SolveOptions opt;
    opt.seed = seed;
    BestApprox b = best_approx(s, x, n, opt);
    return json{{"value", b.value}, {"lower", b.lower}, {"status", to_string(b.status)}, {"method", b.method}}.dump();
}

std::string profile_json(const std::string& scheme, const std::string& element, std::size_t n_max) {
    ApproximationScheme s = build_scheme(parse(scheme));
    Element x = element_from_config(s, parse(element));
    return error_profile(s, x, std::min(n_max, s.max_level())).to_json().dump();
}

std::vector<double> majorant(const std::vector<double>& eps, const std::vector<std::size_t>& h) {
    return lethargy_majorant(NullSequence(eps), IndexMap{h}).values;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "lethargy core: schemes, best approximation, witnesses and audits";

    // Translators run newest first, so the base class goes in before its subclasses.
    auto base = py::register_exception<Error>(m, "LethargyError");
    py::register_exception<UsageError>(m, "UsageError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<IncompatibleVersion>(m, "IncompatibleVersion", base.ptr());

    m.def("best_approx", &best_approx_json, py::arg("scheme"), py::arg("element"), py::arg("n"), py::arg("seed") = 1,
          "E(x, A_n) as a JSON string; scheme and element are JSON descriptors");
    m.def("error_profile", &profile_json, py::arg("scheme"), py::arg("element"), py::arg("n_max"));
    m.def("lethargy_majorant", &majorant, py::arg("eps"), py::arg("h"));
    m.def("convex_majorant", [](const std::vector<double>& eps) { return convex_majorant(NullSequence(eps)).values; });
    m.def("witness", [](const std::string& params) { return witness_from_params(parse(params)).to_json(true).dump(); },
          py::arg("params"));
    m.def("verify_witness", [](const std::string& bundle) { return verify_witness_bundle(parse(bundle)).dump(); });
    m.def("shapiro_check",
          [](const std::string& scheme, std::size_t n_max, std::size_t probes, std::uint64_t seed) {
              return shapiro_check(build_scheme(parse(scheme)), n_max, probes, seed).to_json().dump();
          },
          py::arg("scheme"), py::arg("n_max"), py::arg("probes") = 16, py::arg("seed") = 1);
    m.def("run", [](const std::string& config, const std::string& out_dir) {
              RunOutcome r = run_experiment(parse(config), out_dir);
              return py::make_tuple(r.exit_code, r.report.dump());
          },
          py::arg("config"), py::arg("out_dir") = "");
    m.def("replay", [](const std::string& report) { return replay_report(parse(report)); });
    m.def("list_schemes", []() { return list_schemes().dump(); });

    m.attr("__version__") = kVersion;
}
