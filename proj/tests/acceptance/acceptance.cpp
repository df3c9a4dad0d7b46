// Runs every acceptance criterion with exact rational comparisons and prints
// one PASS/FAIL line per check.
//
//   acceptance [--fixtures DIR] [--expect-fail ID]...
//
// Exit status is 0 when the set of failing checks equals the expected set.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "trmc/errors.hpp"
#include "trmc/residues/closed_forms.hpp"
#include "trmc/verify/verify.hpp"

using namespace trmc;

namespace {

std::string fixture_dir = TRMC_FIXTURE_DIR;

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

std::vector<std::pair<std::string, bool>> results;

void run(const std::string& id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (out.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << t.str() << " s)\n";
    for (const auto& n : out.notes) std::cout << "    " << n << "\n";
    results.emplace_back(id, out.ok);
}

Scenario load(const std::string& name) { return load_scenario(fixture_dir + "/" + name + ".json"); }

MultiPoly poly(const Vars& v, std::initializer_list<std::pair<Rational, Exponent>> terms) {
    MultiPoly p(v);
    for (const auto& [c, e] : terms) p.add_term(e, c);
    return p;
}

TruncatedSeries expand(const MultiPoly& num, const MultiPoly& den, long order) {
    return laurent_expand_at_vertex(RationalFunctionMV(num, den), order);
}

// Coefficientwise comparison on all exponents of total degree <= order.
bool same_series(const TruncatedSeries& a, const TruncatedSeries& b, long order, std::string* where = nullptr) {
    std::set<Exponent> keys;
    for (const auto& [e, c] : a.terms())
        if (total_degree(e) <= order) keys.insert(e);
    for (const auto& [e, c] : b.terms())
        if (total_degree(e) <= order) keys.insert(e);
    for (const auto& e : keys)
        if (a.coeff(e) != b.coeff(e)) {
            if (where) {
                std::string s = "at (";
                for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
                *where = s + "): " + to_string(a.coeff(e)) + " vs " + to_string(b.coeff(e));
            }
            return false;
        }
    return true;
}

void require_series(Outcome& out, const TruncatedSeries& a, const TruncatedSeries& b, long order,
                    const std::string& what) {
    std::string where;
    bool same = same_series(a, b, order, &where);
    out.require(same, what + " differs " + where);
}

const ResidueSource& source(const Report& r, const std::string& kind) {
    for (const auto& s : r.residues)
        if (s.kind == kind) return s;
    throw InternalError("report has no " + kind + " residue");
}

void require_pass(Outcome& out, const Report& r) {
    out.require(r.pass, r.scenario.name + ": intersection and residue series disagree");
    for (const auto* row : r.mismatches()) {
        std::string b;
        for (const auto& x : row->beta.b) b += (b.empty() ? "" : ",") + to_string(x);
        out.require(false, r.scenario.name + ": mismatch at beta (" + b + ")");
    }
}

std::vector<Rational> random_point(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 7);
    std::vector<Rational> a;
    for (size_t i = 0; i < n; ++i) a.push_back(make_rational(num(rng), den(rng)));
    return a;
}

// exponents of total degree `deg` in n variables
void monomials(size_t n, long deg, const std::function<void(const Exponent&)>& f) {
    Exponent e(n, 0);
    std::function<void(size_t, long)> rec = [&](size_t i, long left) {
        if (i + 1 == n) {
            e[i] = static_cast<int>(left);
            f(e);
            return;
        }
        for (long k = left; k >= 0; --k) {
            e[i] = static_cast<int>(k);
            rec(i + 1, left - k);
        }
    };
    rec(0, deg);
}

const std::vector<std::string> kCorpus{
    "f1",       "f1_x1x2",  "f1_x1sq",  "flop1",    "flop2",    "quintic",          "P11222",
    "P11222_blowup_k0", "P11222_blowup_k1", "P11222_blowup_k2", "P11222_blowup_k3", "p1p1",
    "p1p2_k20", "p1p2_k11", "p1p2_k02", "p2p2_k30", "p2p2_k21"};

// ---------------------------------------------------------------- criteria

void hirzebruch(Outcome& out) {
    using Spot = std::pair<Exponent, long>;
    const std::vector<std::pair<std::string, std::vector<Spot>>> cases{
        {"f1",
         {{{0, 1}, 12}, {{1, 1}, 27}, {{0, 2}, 80}, {{1, 2}, 568}, {{0, 3}, 448}, {{2, 2}, 728},
          {{1, 3}, 6544}, {{0, 4}, 2304}, {{3, 2}, 1}}},
        {"f1_x1x2",
         {{{0, 0}, 1}, {{0, 1}, 4}, {{1, 1}, 26}, {{0, 2}, 16}, {{2, 1}, 1}, {{1, 2}, 336}, {{0, 3}, 64},
          {{3, 1}, -1}, {{2, 2}, 716}, {{1, 3}, 2784}, {{0, 4}, 256}, {{4, 1}, 1}, {{3, 2}, 14}}},
        {"f1_x1sq",
         {{{1, 0}, 1}, {{2, 0}, -1}, {{1, 1}, 20}, {{3, 0}, 1}, {{2, 1}, 8}, {{1, 2}, 144}, {{4, 0}, -1},
          {{3, 1}, -9}, {{2, 2}, 656}, {{1, 3}, 832}, {{5, 0}, 1}, {{4, 1}, 10}, {{3, 2}, 84}}},
    };
    for (const auto& [name, spots] : cases) {
        auto s = load(name);
        auto r = verify(s);
        require_pass(out, r);
        out.require(r.order == 4, name + ": fixture order is not 4");
        // spot values reach total degree 5
        VerifyOptions o;
        o.order = 5;
        auto r5 = verify(s, o);
        require_pass(out, r5);
        for (const auto& [e, c] : spots)
            out.require(r5.table.series->coeff(e) == c, name + ": spot coefficient " + std::to_string(c));
    }
}

void flop(Outcome& out) {
    auto y = indexed_vars("y", 2);
    auto r1 = verify(load("flop1"));
    require_pass(out, r1);
    auto expected = TruncatedSeries::from_poly(poly(y, {{1, {0, 0}},
                                                        {27, {1, 0}},
                                                        {1, {0, 1}},
                                                        {729, {2, 0}},
                                                        {1, {0, 2}},
                                                        {19683, {3, 0}},
                                                        {2187, {2, 1}},
                                                        {1, {0, 3}}}),
                                               3);
    require_series(out, source(r1, "fixture").series, expected, 3, "T1 residue expansion");
    require_series(out, *r1.table.series, expected, 3, "T1 intersection series");
    // closed form in u
    auto unum = poly(y, {{1, {0, 0}}, {-27, {1, 0}}, {-81, {1, 1}}});
    auto uden = poly(y, {{1, {0, 0}}, {-1, {0, 1}}}) *
                poly(y, {{1, {0, 0}}, {-54, {1, 0}}, {729, {2, 0}}, {-54, {1, 1}}, {-1458, {2, 1}}, {729, {2, 2}}});
    require_series(out, expand(unum, uden, 3), expected, 3, "u-form closed expression");

    auto r2 = verify(load("flop2"));
    require_pass(out, r2);
    out.require(source(r2, "fixture").series.constant_term() == 0, "T2 residue has a constant term");
    auto wnum = poly(y, {{1, {0, 1}}, {-27, {1, 2}}, {-81, {1, 1}}});
    auto wden = poly(y, {{-1, {0, 0}}, {1, {0, 1}}}) *
                poly(y, {{1, {0, 0}}, {-54, {1, 0}}, {-54, {1, 1}}, {729, {2, 0}}, {-1458, {2, 1}}, {729, {2, 2}}});
    require_series(out, expand(wnum, wden, 3), *r2.table.series, 3, "w-form closed expression vs T2 intersections");

    for (auto [name, value] : {std::pair<std::string, int>{"flop1", 1}, {"flop2", 0}}) {
        auto m = build_model(load(name));
        const auto& v = *m.variety;
        Rational d124 = v.intersection_number({v.divisor_class(0), v.divisor_class(1), v.divisor_class(3)});
        out.require(d124 == value, name + ": <D1 D2 D4> = " + to_string(d124));
    }
}

void weighted(Outcome& out) {
    for (auto [name, w] : {std::pair<std::string, std::vector<long>>{"quintic", {1, 1, 1, 1, 1}},
                           {"P11222", {1, 1, 2, 2, 2}}}) {
        auto s = load(name);
        auto m = build_model(s);
        auto data = weighted_data(w);
        monomials(s.n(), static_cast<long>(s.lattice_dim) - 1, [&](const Exponent& e) {
            MultiPoly q = MultiPoly::monomial(s.polynomial.vars(), e);
            Scenario t = s;
            t.polynomial = q;
            auto p = t.integrand();
            GeneratingOptions o;
            o.grading = m.grading;
            auto table = generating_function(*m.variety, m.mori, p, 5, o);
            std::vector<Rational> wr(w.begin(), w.end());
            Rational lead = data.nu * p.eval(wr);
            TruncatedSeries want(indexed_vars("y", 1), 5);
            for (int b = 0; b <= 5; ++b) want.add_term({b}, lead * Rational(ipow(data.mu, b)));
            std::string where;
            bool same = table.series && same_series(*table.series, want, 5, &where);
            out.require(same,
                        name + ": moduli series for Q = x^" + monomial_string(*q.vars(), e) + " " + where);
        });
        auto r = verify(s);
        require_pass(out, r);
    }
    auto y = indexed_vars("y", 1);
    auto quintic = verify(load("quintic"));
    const auto& qs = *quintic.table.series;
    out.require(qs.coeff({0}) == 5 && qs.coeff({1}) == 15625 && qs.coeff({2}) == 48828125,
                "quintic Yukawa coefficients");
    auto p11222 = verify(load("P11222"));
    const auto& ps = source(p11222, "weighted").series;
    out.require(ps.coeff({0}) == 8 && ps.coeff({1}) == 2097152 && ps.coeff({2}) == Rational(Integer("549755813888")),
                "P(1,1,2,2,2) Yukawa coefficients");
    require_series(out, ps, *p11222.table.series, 5, "P(1,1,2,2,2) residue vs moduli");
}

struct ProductCase {
    std::vector<long> dims;
    std::vector<long> k;
    std::function<std::pair<MultiPoly, MultiPoly>(const Vars&)> printed;  // in u
};

void product_closed_forms(Outcome& out, const std::vector<ProductCase>& cases) {
    for (const auto& c : cases) {
        auto s = product_series(c.dims, c.k, 4);
        auto [num, den] = c.printed(s.vars());
        std::string where;
        bool same = same_series(s, expand(num, den, 4), 4, &where);
        out.require(same,
                    "k = (" + std::to_string(c.k[0]) + "," + std::to_string(c.k[1]) + ") on P^" +
                        std::to_string(c.dims[0]) + " x P^" + std::to_string(c.dims[1]) + " " + where);
    }
}

MultiPoly swap_vars(const MultiPoly& p) {
    MultiPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) out.add_term({e[1], e[0]}, c);
    return out;
}

std::pair<MultiPoly, MultiPoly> p1p1_k10(const Vars& u) {
    return {poly(u, {{2, {0, 0}}, {2, {1, 0}}, {-2, {0, 1}}}),
            poly(u, {{1, {0, 0}}, {-2, {1, 0}}, {-2, {0, 1}}, {1, {2, 0}}, {-2, {1, 1}}, {1, {0, 2}}})};
}

MultiPoly p1p2_printed_den(const Vars& u) {
    // (1 - u1)^3 - 2 u2 (1 - 3 u1)
    return poly(u, {{1, {0, 0}}, {-3, {1, 0}}, {3, {2, 0}}, {-1, {3, 0}}, {-2, {0, 1}}, {6, {1, 1}}});
}

MultiPoly p2p2_den(const Vars& u) {
    // (1 - u1 - u2)^3 - 27 u1 u2
    MultiPoly l = poly(u, {{1, {0, 0}}, {-1, {1, 0}}, {-1, {0, 1}}});
    return l.pow(3) - poly(u, {{27, {1, 1}}});
}

std::pair<MultiPoly, MultiPoly> p2p2_k30(const Vars& u) {
    return {poly(u, {{18, {1, 0}}, {9, {2, 0}}, {9, {1, 1}}}), p2p2_den(u)};
}

std::pair<MultiPoly, MultiPoly> p2p2_k21(const Vars& u) {
    // 3((1 - u2)^2 + u1(1 - 2u1 - u2))
    return {poly(u, {{3, {0, 0}}, {-6, {0, 1}}, {3, {0, 2}}, {3, {1, 0}}, {-6, {2, 0}}, {-3, {1, 1}}}), p2p2_den(u)};
}

void products_moduli(Outcome& out) {
    const std::vector<std::pair<std::string, std::vector<std::vector<long>>>> fans{
        {"p1p1", {{1, 0}, {0, 1}}},
        {"p1p2_k20", {{2, 0}, {1, 1}, {0, 2}}},
        {"p2p2_k30", {{3, 0}, {2, 1}, {1, 2}, {0, 3}}}};
    for (const auto& [name, ks] : fans) {
        auto base = load(name);
        for (const auto& k : ks) {
            Scenario s = base;
            s.expected_residue.reset();
            s.order = 2;
            Exponent e(s.n(), 0);
            size_t pos = 0;
            for (size_t j = 0; j < k.size(); ++j) {
                e[pos] = static_cast<int>(k[j]);
                pos += (*s.product_dims)[j] + 1;
            }
            s.polynomial = MultiPoly::monomial(s.polynomial.vars(), e);
            auto r = verify(s);
            require_pass(out, r);
        }
    }
}

void residue_evaluator(Outcome& out) {
    std::mt19937_64 rng(20240601);
    {
        auto m = build_model(load("f1"));
        auto ev = m.evaluator();
        auto y = indexed_vars("y", 2);
        auto den = poly(y, {{1, {0, 0}}, {1, {1, 0}}, {-8, {0, 1}}, {16, {0, 2}}, {-36, {1, 1}}, {-27, {2, 1}}});
        std::vector<std::pair<Exponent, MultiPoly>> forms{
            {{0, 2, 0, 0}, poly(y, {{1, {0, 0}}, {1, {1, 0}}, {4, {0, 1}}, {3, {1, 1}}})},
            {{1, 1, 0, 0}, poly(y, {{1, {0, 0}}, {1, {1, 0}}, {-4, {0, 1}}, {-6, {1, 1}}})},
            {{2, 0, 0, 0}, poly(y, {{1, {1, 0}}, {12, {1, 1}}})}};
        int done = 0;
        while (done < 10) {
            auto a = random_point(rng, 4);
            std::vector<Rational> yv{a[0] * a[2] / a[3], a[1] * a[3]};
            if (den.eval(yv) == 0) continue;
            for (const auto& [e, num] : forms) {
                Rational got = ev.evaluate(a, MultiPoly::monomial(m.scenario.polynomial.vars(), e));
                out.require(got == num.eval(yv) / den.eval(yv), "F1 residue at a random point");
            }
            ++done;
        }
    }
    {
        auto s = load("flop1");
        auto m = build_model(s);
        auto ev = m.evaluator();
        const auto& f = *s.expected_residue;
        int done = 0;
        while (done < 10) {
            auto a = random_point(rng, 5);
            if (f.denominator.eval(a) == 0) continue;
            out.require(ev.evaluate(a, s.polynomial) == f.numerator.eval(a) / f.denominator.eval(a),
                        "flop residue at a random point");
            ++done;
        }
        bool rejected = false;
        try {
            ev.evaluate(std::vector<Rational>(5, Rational(1)), s.polynomial);
        } catch (const DegenerateError&) {
            rejected = true;
        }
        out.require(rejected, "a = (1,1,1,1,1) not rejected as degenerate");
        out.require(f.denominator.eval(std::vector<Rational>(5, Rational(1))) == 0, "E_A(1,...,1) != 0");
    }
}

void zero_class(Outcome& out) {
    const std::map<std::string, long> volumes{{"f1", 4}, {"flop1", 6}, {"flop2", 6}, {"quintic", 5}, {"P11222", 8}};
    for (const auto& name : kCorpus) {
        auto r = verify(load(name));
        out.require(r.checks.constant_terms_match, name + ": residue constant term != integral of P");
        for (const auto& src : r.residues)
            out.require(src.series.constant_term() == r.checks.integral, name + ": " + src.kind + " constant term");
        out.require(r.checks.stringy_match, name + ": stringy integral != Vol");
        if (auto it = volumes.find(name); it != volumes.end())
            out.require(r.checks.volume == it->second, name + ": Vol = " + to_string(r.checks.volume));
    }
}

void blowup(Outcome& out) {
    for (int k = 0; k <= 3; ++k) {
        auto r = verify(load("P11222_blowup_k" + std::to_string(k)));
        require_pass(out, r);
        TruncatedSeries table(indexed_vars("y", 2), 4);
        for (int l1 = 0; l1 <= 4; ++l1)
            for (int l2 = 0; l1 + l2 <= 4; ++l2) {
                long e = 8 * l1 + 2 * l2 + 3 - k;
                Rational c = Rational(binomial(Integer(l1 + 1 - k), 2 * l2 + 1 - k));
                c *= e >= 0 ? Rational(ipow(2, e)) : 1 / Rational(ipow(2, -e));
                table.add_term({l1, l2}, c);
            }
        require_series(out, source(r, "fixture").series, table, 4, "k = " + std::to_string(k) + " fixture function");
        require_series(out, *r.table.series, table, 4, "k = " + std::to_string(k) + " moduli series");
    }
    auto s = load("P11222_blowup_k0");
    auto m = build_model(s);
    auto ev = m.evaluator();
    auto p = s.integrand();
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 5) {
        auto a = random_point(rng, 6);
        Rational y1 = a[2] * a[3] * a[4] * a[5], y2 = a[0] * a[1] / (a[5] * a[5]);
        Rational den = (1 - 256 * y1) * (1 - 256 * y1) - 262144 * y1 * y1 * y2;
        if (den == 0) continue;
        out.require(ev.evaluate(a, p) == 8 / den, "Y(3,0) at a random point");
        ++done;
    }
}

void properties(Outcome& out) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> small(-5, 5);
    auto nonzero = [&] {
        int x;
        do x = small(rng);
        while (x == 0);
        return x;
    };
    // exact algebra
    auto y = indexed_vars("y", 2);
    auto u = indexed_vars("u", 1);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> deg(0, 3);
        std::vector<Rational> nc(deg(rng) + 1), dc(deg(rng) + 1);
        for (auto& c : nc) c = small(rng);
        for (auto& c : dc) c = small(rng);
        dc[0] = nonzero();
        UniRationalFunction f{UniPoly(nc), UniPoly(dc)};
        long q = 10;
        std::vector<Sample> samples;
        while (samples.size() < 20) {
            ++q;
            bool prime = true;
            for (long d = 2; d * d <= q; ++d) prime = prime && q % d;
            if (!prime) continue;
            Rational x = make_rational(1, q);
            if (f.den().eval(x) != 0) samples.emplace_back(x, f.eval(x));
        }
        out.require(rational_reconstruct(samples, 3) == f, "reconstruction of a random rational function");

        MultiPoly a(y);
        a.add_term({0, 0}, nonzero());
        for (int i = 0; i < 4; ++i) a.add_term({deg(rng), deg(rng)}, small(rng));
        if (a.constant_term() == 0) a.add_term({0, 0}, 1);
        auto sa = TruncatedSeries::from_poly(a, 5);
        auto one = TruncatedSeries::from_poly(MultiPoly::constant(y, 1), 5);
        out.require(sa * series_inverse(sa) == one, "series times its inverse");
        MultiPoly b(y);
        for (int i = 0; i < 3; ++i) b.add_term({deg(rng), deg(rng)}, small(rng));
        auto quotient = laurent_expand_at_vertex(RationalFunctionMV(b, a), 5);
        out.require(quotient * sa == TruncatedSeries::from_poly(b, 5), "expansion times denominator");
        out.require(f.taylor(u, 6) * TruncatedSeries::from_poly(
                                         [&] {
                                             MultiPoly d(u);
                                             for (size_t i = 0; i < f.den().coeffs().size(); ++i)
                                                 d.add_term({static_cast<int>(i)}, f.den().coeffs()[i]);
                                             return d;
                                         }(),
                                         6) ==
                        TruncatedSeries::from_poly(
                            [&] {
                                MultiPoly n(u);
                                for (size_t i = 0; i < f.num().coeffs().size(); ++i)
                                    n.add_term({static_cast<int>(i)}, f.num().coeffs()[i]);
                                return n;
                            }(),
                            6),
                    "Taylor expansion of a reconstructed function");
    }

    // toric geometry on every fixture fan
    std::set<std::string> seen;
    for (const auto& name : kCorpus) {
        auto s = load(name);
        std::ostringstream key;
        key << scenario_to_json(s)["points"] << scenario_to_json(s)["triangulation"];
        if (!seen.insert(key.str()).second) continue;
        auto m = build_model(s);
        const auto& v = *m.variety;
        auto random_class = [&] {
            std::vector<Rational> c(v.n_rays());
            for (auto& x : c) x = small(rng);
            return v.class_of(c);
        };
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<DivisorClass> cls;
            for (size_t i = 0; i < v.dim(); ++i) cls.push_back(random_class());
            Rational base = v.intersection_number(cls);
            auto rev = cls;
            std::reverse(rev.begin(), rev.end());
            out.require(v.intersection_number(rev) == base, name + ": symmetry");
            auto extra = random_class();
            Rational t = small(rng);
            auto comb = cls;
            for (size_t k = 0; k < comb[0].coords.size(); ++k) comb[0].coords[k] += t * extra.coords[k];
            auto only = cls;
            only[0] = extra;
            out.require(v.intersection_number(comb) == base + t * v.intersection_number(only), name + ": multilinearity");
            std::vector<Rational> principal(v.n_rays(), Rational(0));
            for (size_t i = 0; i < v.n_rays(); ++i)
                for (size_t j = 0; j < v.dim(); ++j) principal[i] += static_cast<long>(j + 1) * v.fan().rays()[i][j];
            for (const auto& x : v.class_of(principal).coords) out.require(x == 0, name + ": principal divisor");
        }
        for (size_t c = 0; c < v.fan().max_cones().size(); ++c) {
            std::vector<DivisorClass> cls;
            for (size_t i : v.fan().max_cones()[c]) cls.push_back(v.divisor_class(i));
            out.require(v.intersection_number(cls) == 1 / Rational(v.multiplicity(c)), name + ": cone normalization");
        }
        Integer sum = 0;
        for (const auto& x : m.secondary.chi) sum += x;
        out.require(sum == Integer(v.dim() + 1) * normalized_volume(m.triangulation.base), name + ": sum of chi");
        auto ev = m.evaluator();
        auto a = random_point(rng, ev.n());
        out.require(ev.hessian_determinant(a) == ev.hessian_volume_expansion(a), name + ": Hessian formulas");
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::set<std::string> expect_fail;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--fixtures" && i + 1 < argc)
            fixture_dir = argv[++i];
        else if (arg == "--expect-fail" && i + 1 < argc)
            expect_fail.insert(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--fixtures DIR] [--expect-fail ID]...\n";
            return 2;
        }
    }

    run("1", "F1 series against the three rational functions and spot coefficients", hirzebruch);
    run("2", "flop expansions at both triangulation vertices and <D1 D2 D4>", flop);
    run("3", "weighted projective moduli series, quintic and P(1,1,2,2,2) Yukawa", weighted);
    run("4-p1p1", "P1 x P1 product series against the closed form",
        [](Outcome& o) {
            product_closed_forms(o, {{{1, 1}, {1, 0}, p1p1_k10},
                                     {{1, 1}, {0, 1}, [](const Vars& u) {
                                          auto [n, d] = p1p1_k10(u);
                                          return std::pair{swap_vars(n), swap_vars(d)};
                                      }}});
        });
    run("4-p1p2", "P1 x P2 product series against the printed closed forms", [](Outcome& o) {
        product_closed_forms(
            o, {{{1, 2}, {2, 0},
                 [](const Vars& u) {
                     return std::pair{poly(u, {{make_rational(27, 2), {1, 0}}, {make_rational(9, 2), {2, 0}}}),
                                      p1p2_printed_den(u)};
                 }},
                {{1, 2}, {1, 1},
                 [](const Vars& u) {
                     return std::pair{poly(u, {{3, {0, 0}}, {-3, {0, 1}}, {-3, {2, 0}}}), p1p2_printed_den(u)};
                 }},
                {{1, 2}, {0, 2}, [](const Vars& u) {
                     return std::pair{poly(u, {{2, {0, 0}}, {-4, {1, 0}}, {2, {2, 0}}, {4, {0, 1}}}),
                                      p1p2_printed_den(u)};
                 }}});
    });
    run("4-p2p2", "P2 x P2 product series against the closed forms", [](Outcome& o) {
        auto sym = [](auto f) {
            return [f](const Vars& u) {
                auto [n, d] = f(u);
                return std::pair{swap_vars(n), swap_vars(d)};
            };
        };
        product_closed_forms(o, {{{2, 2}, {3, 0}, p2p2_k30},
                                 {{2, 2}, {2, 1}, p2p2_k21},
                                 {{2, 2}, {1, 2}, sym(p2p2_k21)},
                                 {{2, 2}, {0, 3}, sym(p2p2_k30)}});
    });
    run("4-moduli", "product series against moduli-space intersections for total degree <= 2", products_moduli);
    run("5", "residue evaluator at random regular points and degeneracy detection", residue_evaluator);
    run("6", "degree-zero term and stringy volume on every fixture", zero_class);
    run("7", "P(1,1,2,2,2) blowup Yukawa functions and the d = 4 residue", blowup);
    run("8", "property suites", properties);

    std::set<std::string> failed;
    for (const auto& [id, ok] : results)
        if (!ok) failed.insert(id);
    int status = 0;
    for (const auto& id : failed)
        if (!expect_fail.count(id)) status = 1;
    for (const auto& id : expect_fail)
        if (!failed.count(id)) {
            std::cout << "note: [" << id << "] was expected to fail but passed\n";
            status = 1;
        }
    std::cout << results.size() - failed.size() << " passed, " << failed.size() << " failed";
    if (!expect_fail.empty()) std::cout << " (" << expect_fail.size() << " expected)";
    std::cout << "\n";
    return status;
}
