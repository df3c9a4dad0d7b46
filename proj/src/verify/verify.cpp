#include "trmc/verify/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "trmc/residues/closed_forms.hpp"

namespace trmc {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(name, e.kind(), e.what());
    } catch (const std::exception& e) {
        throw StageError(name, ErrorKind::Internal, e.what());
    }
}

template <class F>
auto timed(std::map<std::string, double>& timing, const std::string& name, F&& f) -> decltype(f()) {
    auto t0 = Clock::now();
    struct Record {
        std::map<std::string, double>& timing;
        const std::string& name;
        Clock::time_point t0;
        ~Record() { timing[name] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }
    } record{timing, name, t0};
    return stage(name, std::forward<F>(f));
}

Vars mori_vars(const Model& m) { return indexed_vars("y", m.mori.generators.size()); }

// Copies a series into the standard y variables after checking its width.
TruncatedSeries in_mori_vars(const TruncatedSeries& s, const Vars& y) {
    if (s.nvars() != y->size()) throw InternalError("residue series has the wrong number of variables");
    TruncatedSeries out(y, s.order());
    for (const auto& [e, c] : s.terms()) out.add_term(e, c);
    return out;
}

ResidueSource fixture_source(const Model& m, long order) {
    const auto& e = *m.scenario.expected_residue;
    const Vars y = mori_vars(m);
    RationalFunctionMV f(e.numerator, e.denominator);
    if (e.variables == "mori") {
        if (e.numerator.nvars() != y->size())
            throw InputError("expected_residue uses " + std::to_string(e.numerator.nvars()) +
                             " Mori variables but the Mori cone has " + std::to_string(y->size()) + " generators");
        f = RationalFunctionMV(e.numerator.renamed(y), e.denominator.renamed(y));
    } else {
        auto g = m.generator_matrix();
        auto chi = m.vertex_exponent();
        std::optional<SubstitutionResult> sub;
        try {
            sub = monomial_substitution(f, g, y, &chi);
        } catch (const InputError&) {
            sub = monomial_substitution(f, g, y);
        }
        f = sub->function;
    }
    return {"fixture", f.to_string(), laurent_expand_at_vertex(f, order)};
}

ResidueSource weighted_source(const Model& m, long order) {
    const auto& w = *m.scenario.weights;
    if (m.mori.generators.size() != 1) throw InputError("weights given but the Mori cone has rank " +
                                                       std::to_string(m.mori.generators.size()));
    const auto& g = m.mori.generators[0].b;
    for (size_t i = 0; i < w.size(); ++i)
        if (g[i] != w[i]) throw InputError("weights do not match the Mori generator");
    MultiPoly p = m.scenario.integrand();
    return {"weighted", wp_residue(w, p).to_string(), in_mori_vars(wp_series(w, p, order), mori_vars(m))};
}

ResidueSource product_source(const Model& m, long order) {
    const auto& dims = *m.scenario.product_dims;
    const size_t r = dims.size();
    if (m.mori.generators.size() != r) throw InputError("product_dims do not match the Mori rank");
    // generator for each factor: the indicator vector of its block of points
    std::vector<size_t> block_of(m.scenario.n());
    std::vector<size_t> slot(r);
    size_t pos = 0;
    for (size_t j = 0; j < r; ++j) {
        CurveClass indicator{std::vector<Integer>(m.scenario.n(), Integer(0))};
        for (long i = 0; i <= dims[j]; ++i, ++pos) {
            block_of[pos] = j;
            indicator.b[pos] = 1;
        }
        auto it = std::find(m.mori.generators.begin(), m.mori.generators.end(), indicator);
        if (it == m.mori.generators.end())
            throw InputError("factor " + std::to_string(j + 1) + " has no matching Mori generator");
        slot[j] = static_cast<size_t>(it - m.mori.generators.begin());
    }
    const MultiPoly& q = m.scenario.polynomial;
    const Vars y = mori_vars(m);
    TruncatedSeries out(y, order);
    for (const auto& [e, c] : q.terms()) {
        std::vector<long> k(r, 0);
        for (size_t i = 0; i < e.size(); ++i) k[block_of[i]] += e[i];
        const auto series = product_series(dims, k, order);
        for (const auto& [ue, uc] : series.terms()) {
            Exponent ye(r, 0);
            Rational coeff = c * uc;
            for (size_t j = 0; j < r; ++j) {
                ye[slot[j]] = ue[j];
                coeff *= pow(Rational(dims[j] + 1), (dims[j] + 1) * ue[j]);  // u_j = n_j^{n_j} y_j
            }
            out.add_term(ye, coeff);
        }
    }
    return {"product", "", out};
}

ResidueSource curve_source(const Model& m, long order) {
    const auto& g = m.mori.generators[0].b;
    // a_j = u on the coordinate with the smallest positive generator entry, so y = u^s
    size_t j = g.size();
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] > 0 && (j == g.size() || g[i] < g[j])) j = i;
    if (j == g.size()) throw InternalError("Mori generator has no positive entry");
    const long s = g[j].get_si();
    CurveSpec spec{std::vector<Rational>(g.size(), Rational(1)), std::vector<long>(g.size(), 0)};
    spec.exponents[j] = 1;
    auto ev = m.evaluator();
    auto res = residue_curve(ev, spec, m.scenario.integrand());
    auto u = indexed_vars("u", 1);
    auto taylor = res.function.taylor(u, s * order);
    const Vars y = mori_vars(m);
    TruncatedSeries out(y, order);
    for (const auto& [e, c] : taylor.terms()) {
        if (e[0] % s != 0) throw InternalError("residue along the curve is not a function of y = u^" + std::to_string(s));
        out.add_term({static_cast<int>(e[0] / s)}, c);
    }
    std::string text = res.function.to_string("u") + " at y1 = u^" + std::to_string(s);
    return {"curve", text, out};
}

void for_each_exponent(size_t r, long order, const std::function<void(const Exponent&)>& f) {
    Exponent e(r, 0);
    std::function<void(size_t, long)> rec = [&](size_t i, long left) {
        if (i == r) {
            f(e);
            return;
        }
        for (long k = 0; k <= left; ++k) {
            e[i] = static_cast<int>(k);
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, order);
}

json rational_json(const Rational& q) { return to_string(q); }

json rationals_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string tuple_string(const std::vector<Integer>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(to_string(x));
    return "(" + join(parts, ",") + ")";
}

std::string tuple_string(const Exponent& v) {
    std::vector<std::string> parts;
    for (int x : v) parts.push_back(std::to_string(x));
    return "(" + join(parts, ",") + ")";
}

}  // namespace

IntegerMatrix Model::generator_matrix() const {
    const size_t n = scenario.n();
    IntegerMatrix g(mori.generators.size(), n);
    for (size_t k = 0; k < mori.generators.size(); ++k)
        for (size_t i = 0; i < n; ++i) g(k, i) = mori.generators[k].b[i];
    return g;
}

std::vector<int> Model::vertex_exponent() const {
    std::vector<int> out;
    for (size_t i = 1; i < secondary.chi.size(); ++i) out.push_back(static_cast<int>(secondary.chi[i].get_si()));
    return out;
}

ResidueEvaluator Model::evaluator() const { return ResidueEvaluator(triangulation.base, scenario.points); }

Model build_model(const Scenario& s, size_t monomial_cap) {
    Model m{s, {}, {}, {}, nullptr, {}, {}};
    stage("triangulation", [&] {
        std::vector<LatticePoint> pts{LatticePoint(s.lattice_dim, 0)};
        pts.insert(pts.end(), s.points.begin(), s.points.end());
        auto base = LatticePolytope::from_points(pts);
        if (base.dim() != s.lattice_dim) throw GeometryError("points do not span the lattice");
        std::vector<std::vector<size_t>> simplices;
        for (const auto& t : s.triangulation) {
            std::vector<size_t> simplex{0};
            simplex.insert(simplex.end(), t.begin(), t.end());
            simplices.push_back(simplex);
        }
        m.triangulation = Triangulation::make(base, simplices);
        auto report = validate_triangulation(m.triangulation, true);
        if (!report.ok()) throw GeometryError(join(report.violations, "; "));
    });
    stage("coherence", [&] {
        m.certificate = coherence_certificate(m.triangulation);
        if (!check_certificate(m.triangulation, m.certificate))
            throw InternalError("coherence certificate failed its independent check");
        m.secondary = characteristic_function(m.triangulation);
    });
    stage("fan", [&] {
        Fan f = fan_from_triangulation(m.triangulation);
        if (f.n_rays() != s.n()) {
            for (size_t i = 0; i < s.n(); ++i)
                if (std::find(f.source_points.begin(), f.source_points.end(), i + 1) == f.source_points.end())
                    throw InputError("point " + std::to_string(i + 1) + " is not a vertex of any simplex");
        }
        m.variety = std::make_shared<const ToricVariety>(std::move(f), std::nullopt, monomial_cap);
    });
    stage("mori", [&] {
        m.mori = mori_cone(*m.variety);
        if (s.mori_generators) {
            std::vector<CurveClass> given;
            for (const auto& row : *s.mori_generators) {
                CurveClass c;
                for (long x : row) c.b.push_back(Integer(x));
                given.push_back(c);
            }
            auto a = given, b = m.mori.generators;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) {
                std::vector<std::string> found;
                for (const auto& g : m.mori.generators) found.push_back(tuple_string(g.b));
                throw InputError("mori_generators override does not match the computed generators " +
                                 join(found, ","));
            }
            m.mori.generators = given;
        }
        m.grading = default_polarization(*m.variety, m.mori);
    });
    return m;
}

std::vector<ResidueSource> residue_sources(const Model& m, long order) {
    std::vector<ResidueSource> out;
    stage("residue", [&] {
        if (m.scenario.expected_residue) out.push_back(fixture_source(m, order));
        if (m.scenario.weights) out.push_back(weighted_source(m, order));
        if (m.scenario.product_dims) out.push_back(product_source(m, order));
        if (m.mori.generators.size() == 1) out.push_back(curve_source(m, order));
        if (out.empty())
            throw InputError("no residue source: give expected_residue, weights or product_dims "
                             "(reconstruction needs Mori rank one)");
    });
    return out;
}

std::vector<const CoefficientRow*> Report::mismatches() const {
    std::vector<const CoefficientRow*> out;
    for (const auto& r : rows)
        if (!r.match) out.push_back(&r);
    return out;
}

Report verify(const Scenario& s, const VerifyOptions& opts) {
    Report rep;
    rep.scenario = s;
    rep.order = opts.order.value_or(s.order);
    if (rep.order < 0) throw StageError("load", ErrorKind::Input, "order must be nonnegative");

    Model m = timed(rep.timing_ms, "geometry", [&] { return build_model(s); });
    rep.coherence_lift = m.certificate.lift;
    rep.vertex_exponent = m.vertex_exponent();
    rep.mori_generators = m.mori.generators;
    rep.warnings = m.mori.warnings;
    rep.grading = m.grading;
    const MultiPoly p = s.integrand();
    const size_t r = m.mori.generators.size();

    size_t count = 0;
    for_each_exponent(r, rep.order, [&](const Exponent&) { ++count; });
    if (count > opts.max_monomials)
        throw StageError("compare", ErrorKind::Capacity,
                         std::to_string(count) + " coefficients exceed --max-monomials " +
                             std::to_string(opts.max_monomials));

    rep.table = timed(rep.timing_ms, "intersection", [&] {
        GeneratingOptions g;
        g.grading = m.grading;
        g.jobs = std::max(1u, opts.jobs);
        auto t = generating_function(*m.variety, m.mori, p, rep.order, g);
        if (!t.series) throw GeometryError("intersection numbers do not form a series in the Mori generators");
        return t;
    });
    rep.residues = timed(rep.timing_ms, "residue", [&] { return residue_sources(m, rep.order); });

    timed(rep.timing_ms, "compare", [&] {
        rep.pass = true;
        for_each_exponent(r, rep.order, [&](const Exponent& lambda) {
            CoefficientRow row;
            row.lambda = lambda;
            row.beta.b.assign(s.n(), Integer(0));
            for (size_t k = 0; k < r; ++k)
                for (size_t i = 0; i < s.n(); ++i) row.beta.b[i] += lambda[k] * m.mori.generators[k].b[i];
            row.intersection = rep.table.series->coeff(lambda);
            for (const auto& src : rep.residues) {
                row.residue.push_back(src.series.coeff(lambda));
                if (row.residue.back() != row.intersection) row.match = false;
            }
            rep.pass = rep.pass && row.match;
            rep.rows.push_back(std::move(row));
        });
        std::sort(rep.rows.begin(), rep.rows.end(), [](const CoefficientRow& a, const CoefficientRow& b) {
            return GradedLex{}(a.lambda, b.lambda);
        });

        auto& c = rep.checks;
        c.integral = m.variety->integrate_polynomial(p);
        for (const auto& src : rep.residues)
            if (src.series.constant_term() != c.integral) c.constant_terms_match = false;
        c.stringy_integral = m.variety->integrate_polynomial(stringy_polynomial(*m.variety, p.vars()));
        c.volume = normalized_volume(m.triangulation.base);
        c.stringy_match = c.stringy_integral == Rational(c.volume);
    });
    return rep;
}

json curve_to_json(const CurveClass& c) {
    json out = json::array();
    for (const auto& x : c.b) out.push_back(x.get_si());
    return out;
}

json series_to_json(const TruncatedSeries& s) {
    json out = json::array();
    for (const auto& [e, c] : s.terms()) out.push_back({{"coeff", to_string(c)}, {"exponents", e}});
    return out;
}

json report_to_json(const Report& r, bool include_timing) {
    json j;
    j["name"] = r.scenario.name;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["order"] = r.order;
    j["scenario"] = scenario_to_json(r.scenario);

    json gens = json::array();
    for (const auto& g : r.mori_generators) gens.push_back(curve_to_json(g));
    j["certificates"] = {{"coherence_lift", rationals_json(r.coherence_lift)},
                         {"vertex_exponent", r.vertex_exponent},
                         {"mori_generators", gens},
                         {"grading", rationals_json(r.grading.coords)},
                         {"warnings", r.warnings}};

    json table = json::array();
    for (const auto& [beta, value] : r.table.entries)
        table.push_back({{"beta", curve_to_json(beta)}, {"value", rational_json(value)}});
    j["intersection_table"] = table;
    j["intersection_series"] = series_to_json(*r.table.series);

    json sources = json::array();
    for (const auto& s : r.residues)
        sources.push_back({{"kind", s.kind}, {"function", s.function}, {"series", series_to_json(s.series)}});
    j["residue_sources"] = sources;

    json rows = json::array();
    for (const auto& row : r.rows) {
        json res;
        for (size_t k = 0; k < r.residues.size(); ++k) res[r.residues[k].kind] = rational_json(row.residue[k]);
        rows.push_back({{"lambda", row.lambda},
                        {"beta", curve_to_json(row.beta)},
                        {"intersection", rational_json(row.intersection)},
                        {"residue", res},
                        {"match", row.match}});
    }
    j["coefficients"] = rows;
    json bad = json::array();
    for (const auto* row : r.mismatches()) bad.push_back(curve_to_json(row->beta));
    j["mismatched_betas"] = bad;

    j["theorem_checks"] = {{"integral", rational_json(r.checks.integral)},
                           {"constant_terms_match", r.checks.constant_terms_match},
                           {"stringy_integral", rational_json(r.checks.stringy_integral)},
                           {"volume", to_string(r.checks.volume)},
                           {"stringy_match", r.checks.stringy_match}};
    if (include_timing) j["timing_ms"] = r.timing_ms;
    return j;
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "scenario " << r.scenario.name << ": " << (r.pass ? "PASS" : "FAIL") << " to order " << r.order << "\n";
    std::vector<std::string> gens;
    for (const auto& g : r.mori_generators) gens.push_back(tuple_string(g.b));
    out << "mori generators " << join(gens, ",") << "\n";
    out << "vertex exponent " << tuple_string(r.vertex_exponent) << "\n";
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    out << "intersection series " << r.table.series->to_string() << "\n";
    for (const auto& s : r.residues) {
        out << "residue [" << s.kind << "]";
        if (!s.function.empty()) out << " " << s.function;
        out << "\n  " << s.series.to_string() << "\n";
    }
    for (const auto* row : r.mismatches()) {
        out << "mismatch at beta " << tuple_string(row->beta.b) << ": intersection " << to_string(row->intersection);
        for (size_t k = 0; k < r.residues.size(); ++k)
            out << ", " << r.residues[k].kind << " " << to_string(row->residue[k]);
        out << "\n";
    }
    out << "integral of P " << to_string(r.checks.integral)
        << (r.checks.constant_terms_match ? " = " : " != ") << "residue constant term\n";
    out << "stringy integral " << to_string(r.checks.stringy_integral) << (r.checks.stringy_match ? " = " : " != ")
        << "Vol " << to_string(r.checks.volume) << "\n";
    std::vector<std::string> times;
    for (const auto& [k, v] : r.timing_ms) {
        std::ostringstream t;
        t.precision(1);
        t << std::fixed << k << " " << v << " ms";
        times.push_back(t.str());
    }
    out << "timing: " << join(times, ", ") << "\n";
    return out.str();
}

}  // namespace trmc
