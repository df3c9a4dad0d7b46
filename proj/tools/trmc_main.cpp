#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trmc/verify/verify.hpp"

using namespace trmc;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kMismatch = 1, kInputError = 2;

struct Common {
    std::string file;
    std::string report = "text";
    size_t max_monomials = 20000;
    unsigned jobs = 1;
    std::optional<long> order;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("file", c.file, "scenario JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("--report", c.report, "output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-monomials", c.max_monomials, "cap on compared coefficients");
    cmd->add_option("--jobs", c.jobs, "worker threads for intersection numbers")->check(CLI::PositiveNumber);
    cmd->add_option("--order", c.order, "truncation order K")->check(CLI::NonNegativeNumber);
}

std::string tuple(const std::vector<Integer>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

std::string tuple(const std::vector<Rational>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

void emit(const Common& c, const json& j, const std::string& text) {
    if (c.report == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

Model model_of(const Common& c) { return build_model(load_scenario(c.file)); }

int run_verify(const Common& c) {
    VerifyOptions o;
    o.order = c.order;
    o.jobs = c.jobs;
    o.max_monomials = c.max_monomials;
    Report r = verify(load_scenario(c.file), o);
    emit(c, report_to_json(r), report_to_text(r));
    return r.pass ? kPass : kMismatch;
}

int run_residue(const Common& c, const std::vector<std::string>& at, bool curve) {
    Model m = model_of(c);
    auto ev = m.evaluator();
    MultiPoly p = m.scenario.integrand();
    if (!at.empty()) {
        if (at.size() != m.scenario.n())
            throw InputError("--at needs " + std::to_string(m.scenario.n()) + " coefficients");
        std::vector<Rational> a;
        for (const auto& s : at) a.push_back(parse_rational(s));
        Rational v = ev.evaluate(a, p);
        emit(c, {{"point", at}, {"value", to_string(v)}}, to_string(v) + "\n");
        return kPass;
    }
    if (!curve) throw InputError("residue needs --at or --curve");
    // a_i = u^{phi_i - phi_0} along the integer-scaled coherence lift
    const auto& lift = m.certificate.lift;
    Integer den = lcm_of_denominators(lift);
    CurveSpec spec{std::vector<Rational>(m.scenario.n(), Rational(1)), {}};
    for (size_t i = 1; i < lift.size(); ++i) {
        Rational e = (lift[i] - lift[0]) * den;
        spec.exponents.push_back(e.get_num().get_si());
    }
    auto res = residue_curve(ev, spec, p);
    json j{{"exponents", spec.exponents},
           {"function", res.function.to_string("u")},
           {"samples", res.log.samples.size()},
           {"skipped", res.log.skipped.size()}};
    std::string exps = "(";
    for (size_t i = 0; i < spec.exponents.size(); ++i) exps += (i ? "," : "") + std::to_string(spec.exponents[i]);
    emit(c, j, "curve a = u^" + exps + ")\n" + res.function.to_string("u") + "\n");
    return kPass;
}

int run_expand(const Common& c, bool yukawa_only) {
    Model m = model_of(c);
    if (yukawa_only && m.scenario.mode != "yukawa") throw InputError("scenario is not in yukawa mode");
    auto sources = residue_sources(m, c.order.value_or(m.scenario.order));
    json j = json::array();
    std::string text;
    for (const auto& s : sources) {
        j.push_back({{"kind", s.kind}, {"function", s.function}, {"series", series_to_json(s.series)}});
        text += s.kind + (s.function.empty() ? "" : ": " + s.function) + "\n  " + s.series.to_string() + "\n";
    }
    emit(c, j, text);
    return kPass;
}

int run_intersect(const Common& c, const std::vector<long>& classes) {
    Model m = model_of(c);
    const auto& v = *m.variety;
    Rational value;
    if (classes.empty()) {
        value = v.integrate_polynomial(m.scenario.integrand());
    } else {
        if (classes.size() != v.dim()) throw InputError("--classes needs " + std::to_string(v.dim()) + " ray indices");
        std::vector<DivisorClass> cls;
        for (long i : classes) {
            if (i < 1 || i > static_cast<long>(v.n_rays())) throw InputError("ray index out of range");
            cls.push_back(v.divisor_class(static_cast<size_t>(i - 1)));
        }
        value = v.intersection_number(cls);
    }
    emit(c, {{"classes", classes}, {"value", to_string(value)}}, to_string(value) + "\n");
    return kPass;
}

int run_mori(const Common& c) {
    Model m = model_of(c);
    json gens = json::array(), nefs = json::array();
    std::string g, n;
    for (const auto& x : m.mori.generators) {
        gens.push_back(curve_to_json(x));
        g += (g.empty() ? "" : ",") + tuple(x.b);
    }
    for (const auto& x : m.mori.nef_generators) {
        json row = json::array();
        for (const auto& q : x.coords) row.push_back(to_string(q));
        nefs.push_back(row);
        n += (n.empty() ? "" : ",") + tuple(x.coords);
    }
    std::string text = g + "\nnef " + n + "\n";
    for (const auto& w : m.mori.warnings) text += "warning: " + w + "\n";
    emit(c, {{"generators", gens}, {"nef_generators", nefs}, {"warnings", m.mori.warnings}}, text);
    return kPass;
}

int run_secondary(const Common& c) {
    Model m = model_of(c);
    auto chi = m.vertex_exponent();
    json lift = json::array();
    for (const auto& q : m.certificate.lift) lift.push_back(to_string(q));
    std::string e = "(";
    for (size_t i = 0; i < chi.size(); ++i) e += (i ? "," : "") + std::to_string(chi[i]);
    e += ")";
    std::string text = "exponents " + e + "\ncoefficient " + to_string(m.secondary.gkz_coefficient) +
                       "\nlift " + tuple(m.certificate.lift) + "\n";
    emit(c,
         {{"exponents", chi},
          {"origin_exponent", m.secondary.chi[0].get_si()},
          {"coefficient", to_string(m.secondary.gkz_coefficient)},
          {"coherence_lift", lift}},
         text);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric residue and Morrison-Plesser verifier"};
    app.require_subcommand(1);
    Common c;
    std::vector<std::string> at;
    bool curve = false;
    std::vector<long> classes;

    auto* verify_cmd = app.add_subcommand("verify", "compare intersection and residue series");
    auto* residue_cmd = app.add_subcommand("residue", "evaluate the toric residue");
    auto* expand_cmd = app.add_subcommand("expand", "expand the residue side at the triangulation vertex");
    auto* intersect_cmd = app.add_subcommand("intersect", "intersection numbers on the toric variety");
    auto* mori_cmd = app.add_subcommand("mori", "Mori cone generators");
    auto* secondary_cmd = app.add_subcommand("secondary", "secondary polytope vertex of the triangulation");
    auto* yukawa_cmd = app.add_subcommand("yukawa", "Yukawa function of a yukawa-mode scenario");
    for (auto* cmd : {verify_cmd, residue_cmd, expand_cmd, intersect_cmd, mori_cmd, secondary_cmd, yukawa_cmd})
        add_common(cmd, c);
    residue_cmd->add_option("--at", at, "coefficients a1,...,an")->delimiter(',');
    residue_cmd->add_flag("--curve", curve, "reconstruct along the coherence lift");
    intersect_cmd->add_option("--classes", classes, "1-based ray indices, one per factor")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*verify_cmd) return run_verify(c);
        if (*residue_cmd) return run_residue(c, at, curve);
        if (*expand_cmd) return run_expand(c, false);
        if (*yukawa_cmd) return run_expand(c, true);
        if (*intersect_cmd) return run_intersect(c, classes);
        if (*mori_cmd) return run_mori(c);
        if (*secondary_cmd) return run_secondary(c);
    } catch (const StageError& e) {
        std::cerr << "error [" << error_kind_name(e.kind()) << "] " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
