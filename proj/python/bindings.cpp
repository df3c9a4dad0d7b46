#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trmc/verify/verify.hpp"

namespace py = pybind11;
using namespace trmc;
using nlohmann::json;

namespace {

// Scenarios and reports cross the boundary as JSON text.
Scenario scenario_of(const std::string& text) { return parse_scenario(json::parse(text)); }

std::string verify_json(const std::string& scenario, std::optional<long> order, unsigned jobs, size_t max_monomials,
                        bool timing) {
    VerifyOptions o;
    o.order = order;
    o.jobs = jobs;
    o.max_monomials = max_monomials;
    Report r;
    {
        py::gil_scoped_release release;
        r = verify(scenario_of(scenario), o);
    }
    return report_to_json(r, timing).dump();
}

std::string residue_at(const std::string& scenario, const std::vector<std::string>& a) {
    Model m = build_model(scenario_of(scenario));
    if (a.size() != m.scenario.n()) throw InputError("expected " + std::to_string(m.scenario.n()) + " coefficients");
    std::vector<Rational> q;
    for (const auto& s : a) q.push_back(parse_rational(s));
    return to_string(m.evaluator().evaluate(q, m.scenario.integrand()));
}

std::string intersect(const std::string& scenario, const std::vector<size_t>& rays) {
    Model m = build_model(scenario_of(scenario));
    const auto& v = *m.variety;
    if (rays.empty()) return to_string(v.integrate_polynomial(m.scenario.integrand()));
    if (rays.size() != v.dim()) throw InputError("need " + std::to_string(v.dim()) + " ray indices");
    std::vector<DivisorClass> cls;
    for (size_t i : rays) {
        if (i < 1 || i > v.n_rays()) throw InputError("ray index out of range");
        cls.push_back(v.divisor_class(i - 1));
    }
    return to_string(v.intersection_number(cls));
}

std::string mori(const std::string& scenario) {
    Model m = build_model(scenario_of(scenario));
    json out = json::array();
    for (const auto& c : m.mori.generators) out.push_back(curve_to_json(c));
    return out.dump();
}

std::string expand(const std::string& scenario, std::optional<long> order) {
    Model m = build_model(scenario_of(scenario));
    json out = json::array();
    for (const auto& s : residue_sources(m, order.value_or(m.scenario.order)))
        out.push_back({{"kind", s.kind}, {"function", s.function}, {"series", series_to_json(s.series)}});
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_trmc, m) {
    m.doc() = "exact toric residue and intersection verifier";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const StageError& e) {
            py::set_error(error, py::make_tuple(e.what(), error_kind_name(e.kind()), e.stage()));
        } catch (const Error& e) {
            py::set_error(error, py::make_tuple(e.what(), error_kind_name(e.kind()), py::none()));
        }
    });

    m.def("normalize_scenario", [](const std::string& s) { return scenario_to_json(scenario_of(s)).dump(); });
    m.def("verify", &verify_json, py::arg("scenario"), py::arg("order") = py::none(), py::arg("jobs") = 1,
          py::arg("max_monomials") = 20000, py::arg("timing") = true);
    m.def("residue_at", &residue_at);
    m.def("intersect", &intersect, py::arg("scenario"), py::arg("rays") = std::vector<size_t>{});
    m.def("mori", &mori);
    m.def("expand", &expand, py::arg("scenario"), py::arg("order") = py::none());
}
