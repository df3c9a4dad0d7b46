#include "trmc/polytope/triangulation.hpp"

#include <algorithm>
#include <set>

#include "trmc/algebra/fourier_motzkin.hpp"
#include "trmc/algebra/matrix.hpp"
#include "trmc/errors.hpp"
#include "trmc/util/subsets.hpp"

namespace trmc {

Triangulation Triangulation::make(const LatticePolytope& base, std::vector<std::vector<size_t>> simplices) {
    Triangulation t{base, {}};
    for (auto& s : simplices) {
        if (s.size() != base.dim() + 1)
            throw InputError("simplex with " + std::to_string(s.size()) + " vertices in dimension " +
                             std::to_string(base.dim()));
        for (size_t i : s)
            if (i >= base.points().size()) throw InputError("simplex vertex index " + std::to_string(i) + " out of range");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("repeated simplex vertex");
        t.simplices.push_back({std::move(s)});
    }
    return t;
}

std::vector<LatticePoint> Triangulation::simplex_points(size_t i) const {
    std::vector<LatticePoint> out;
    for (size_t v : simplices.at(i).vertices) out.push_back(base.points()[v]);
    return out;
}

Integer Triangulation::simplex_volume(size_t i) const { return trmc::simplex_volume(simplex_points(i)); }

namespace {

std::string simplex_name(const Triangulation& t, size_t i) {
    std::string s = "{";
    for (size_t v : t.simplices[i].vertices) s += (s.size() > 1 ? "," : "") + std::to_string(v);
    return s + "}";
}

// Rows are the affine barycentric functionals: lambda_k(x) = row_k . (x, 1).
RationalMatrix barycentric_functionals(const std::vector<LatticePoint>& verts) {
    const size_t d = verts[0].size();
    RationalMatrix mt(d + 1, d + 1);  // transpose of [v_k ; 1] column matrix
    for (size_t k = 0; k <= d; ++k) {
        for (size_t j = 0; j < d; ++j) mt(k, j) = verts[k][j];
        mt(k, d) = 1;
    }
    RationalMatrix out(d + 1, d + 1);
    for (size_t k = 0; k <= d; ++k) {
        std::vector<Rational> e(d + 1, Rational(0));
        e[k] = 1;
        auto r = solve(mt, e);
        if (!r) throw GeometryError("degenerate simplex");
        for (size_t j = 0; j <= d; ++j) out(k, j) = (*r)[j];
    }
    return out;
}

Rational apply(const RationalMatrix& f, size_t k, const std::vector<Rational>& x) {
    Rational s = f(k, x.size());
    for (size_t j = 0; j < x.size(); ++j) s += f(k, j) * x[j];
    return s;
}

std::vector<Rational> barycentric(const RationalMatrix& f, const LatticePoint& p) {
    std::vector<Rational> x(p.begin(), p.end()), out;
    for (size_t k = 0; k < f.rows(); ++k) out.push_back(apply(f, k, x));
    return out;
}

// Vertices of conv(P) ∩ conv(Q) all lie in conv(P ∩ Q vertex sets)?
bool proper_intersection(const std::vector<LatticePoint>& P, const std::vector<size_t>& pidx,
                         const std::vector<LatticePoint>& Q, const std::vector<size_t>& qidx) {
    const size_t d = P[0].size();
    auto fp = barycentric_functionals(P), fq = barycentric_functionals(Q);
    std::vector<bool> shared(d + 1, false);
    for (size_t k = 0; k <= d; ++k) shared[k] = std::find(qidx.begin(), qidx.end(), pidx[k]) != qidx.end();
    std::vector<const RationalMatrix*> owner;
    std::vector<size_t> row;
    for (size_t k = 0; k <= d; ++k) owner.push_back(&fp), row.push_back(k);
    for (size_t k = 0; k <= d; ++k) owner.push_back(&fq), row.push_back(k);
    bool ok = true;
    for_each_subset(owner.size(), d, [&](const std::vector<size_t>& sel) {
        RationalMatrix a(d, d);
        std::vector<Rational> b(d);
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j) a(i, j) = (*owner[sel[i]])(row[sel[i]], j);
            b[i] = -(*owner[sel[i]])(row[sel[i]], d);
        }
        if (determinant(a) == 0) return true;
        auto x = *solve(a, b);
        for (size_t l = 0; l < owner.size(); ++l)
            if (apply(*owner[l], row[l], x) < 0) return true;  // not in the intersection
        for (size_t k = 0; k <= d; ++k)
            if (!shared[k] && apply(fp, k, x) != 0) {
                ok = false;
                return false;
            }
        return true;
    });
    return ok;
}

}  // namespace

TriangulationReport validate_triangulation(const Triangulation& t, bool star) {
    TriangulationReport rep;
    const auto& A = t.base.points();
    const size_t d = t.base.dim();
    Integer total = 0;
    bool all_full = true;
    for (size_t i = 0; i < t.simplices.size(); ++i) {
        Integer v = t.simplex_volume(i);
        if (v == 0) {
            rep.violations.push_back("simplex " + simplex_name(t, i) + " is degenerate");
            all_full = false;
        }
        total += v;
    }
    Integer vol = normalized_volume(t.base);
    if (total != vol)
        rep.violations.push_back("volume sum " + total.get_str() + " differs from Vol(polytope) = " + vol.get_str());
    if (all_full) {
        for (size_t i = 0; i < t.simplices.size(); ++i)
            for (size_t j = i + 1; j < t.simplices.size(); ++j)
                if (!proper_intersection(t.simplex_points(i), t.simplices[i].vertices, t.simplex_points(j),
                                         t.simplices[j].vertices))
                    rep.violations.push_back("simplices " + simplex_name(t, i) + " and " + simplex_name(t, j) +
                                             " do not meet in a common face");
    }
    if (star) {
        if (A.empty() || A[0] != LatticePoint(d, 0)) {
            rep.violations.push_back("star mode needs the origin at index 0");
        } else {
            for (size_t i = 0; i < t.simplices.size(); ++i)
                if (t.simplices[i].vertices.front() != 0)
                    rep.violations.push_back("simplex " + simplex_name(t, i) + " does not contain the origin");
        }
    }
    return rep;
}

std::vector<Wall> interior_walls(const Triangulation& t) {
    std::map<std::vector<size_t>, std::vector<std::pair<size_t, size_t>>> faces;
    for (size_t i = 0; i < t.simplices.size(); ++i) {
        const auto& s = t.simplices[i].vertices;
        for (size_t k = 0; k < s.size(); ++k) {
            std::vector<size_t> f;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != k) f.push_back(s[j]);
            faces[f].push_back({i, s[k]});
        }
    }
    std::vector<Wall> out;
    for (const auto& [f, inc] : faces) {
        if (inc.size() > 2) throw GeometryError("codimension-one face shared by more than two simplices");
        if (inc.size() == 2) out.push_back({f, inc[0].first, inc[1].first, inc[0].second, inc[1].second});
    }
    return out;
}

CoherenceCertificate coherence_certificate(const Triangulation& t) {
    const auto& A = t.base.points();
    const size_t n = A.size();
    if (t.simplices.empty()) throw InputError("empty triangulation");

    // phi(q) - sum beta_v phi(v) >= 1 whenever q = sum beta_v v over a simplex's vertices
    InequalitySystem cs;
    auto add_above = [&](size_t simplex, size_t q) {
        auto beta = barycentric(barycentric_functionals(t.simplex_points(simplex)), A[q]);
        LinearInequality c{std::vector<Rational>(n, Rational(0)), 1};
        c.a[q] += 1;
        for (size_t k = 0; k < beta.size(); ++k) c.a[t.simplices[simplex].vertices[k]] -= beta[k];
        cs.push_back(std::move(c));
    };
    for (const auto& w : interior_walls(t)) add_above(w.left, w.right_apex);
    std::set<size_t> used;
    for (const auto& s : t.simplices) used.insert(s.vertices.begin(), s.vertices.end());
    for (size_t q = 0; q < n; ++q) {
        if (used.count(q)) continue;
        for (size_t i = 0; i < t.simplices.size(); ++i) {
            auto beta = barycentric(barycentric_functionals(t.simplex_points(i)), A[q]);
            if (std::all_of(beta.begin(), beta.end(), [](const Rational& b) { return b >= 0; })) {
                add_above(i, q);
                break;
            }
        }
    }

    // gauge: phi vanishes on the first simplex
    std::vector<bool> fixed(n, false);
    for (size_t v : t.simplices[0].vertices) fixed[v] = true;
    for (auto& c : cs)
        for (size_t v = 0; v < n; ++v)
            if (fixed[v]) c.a[v] = 0;
    const auto incoherent = [] { return GeometryError("triangulation is not coherent (no convex lift)"); };
    if (!fm_prune(cs)) throw incoherent();

    std::vector<size_t> order;
    std::vector<InequalitySystem> stages;
    std::vector<bool> eliminated = fixed;
    for (;;) {
        size_t best = n, best_cost = 0;
        for (size_t v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            size_t pos = 0, neg = 0;
            for (const auto& c : cs) pos += c.a[v] > 0, neg += c.a[v] < 0;
            if (best == n || pos * neg < best_cost) best = v, best_cost = pos * neg;
        }
        if (best == n) break;
        InequalitySystem with;
        for (const auto& c : cs)
            if (c.a[best] != 0) with.push_back(c);
        cs = fm_eliminate(cs, best);
        if (!fm_prune(cs)) throw incoherent();
        order.push_back(best);
        stages.push_back(std::move(with));
        eliminated[best] = true;
    }

    std::vector<Rational> phi(n, Rational(0));
    for (size_t s = order.size(); s-- > 0;) {
        auto [lo, hi] = fm_bounds(stages[s], order[s], phi);
        if (lo && hi && *lo > *hi) throw InternalError("Fourier-Motzkin back-substitution failed");
        Rational val = 0;
        if (lo) {
            val = Rational(ceil_of(*lo));
            if (hi && val > *hi) val = *lo;
        } else if (hi) {
            val = std::min(Rational(0), Rational(floor_of(*hi)));
        }
        phi[order[s]] = val;
    }
    Integer l = lcm_of_denominators(phi);
    for (auto& x : phi) x *= l;

    CoherenceCertificate cert{phi};
    if (!check_certificate(t, cert)) throw InternalError("computed lift fails the convexity check");
    return cert;
}

bool check_certificate(const Triangulation& t, const CoherenceCertificate& c) {
    const auto& A = t.base.points();
    const size_t d = t.base.dim();
    if (c.lift.size() != A.size()) return false;
    // affine function (a, b) interpolating the lift on simplex i
    auto affine = [&](size_t i) {
        RationalMatrix m(d + 1, d + 1);
        std::vector<Rational> rhs(d + 1);
        const auto& s = t.simplices[i].vertices;
        for (size_t k = 0; k <= d; ++k) {
            for (size_t j = 0; j < d; ++j) m(k, j) = A[s[k]][j];
            m(k, d) = 1;
            rhs[k] = c.lift[s[k]];
        }
        return *solve(m, rhs);
    };
    auto value = [&](const std::vector<Rational>& f, const LatticePoint& p) {
        Rational s = f[d];
        for (size_t j = 0; j < d; ++j) s += f[j] * p[j];
        return s;
    };
    std::vector<std::vector<Rational>> fs;
    for (size_t i = 0; i < t.simplices.size(); ++i) fs.push_back(affine(i));
    for (const auto& w : interior_walls(t)) {
        if (!(c.lift[w.right_apex] > value(fs[w.left], A[w.right_apex]))) return false;
        if (!(c.lift[w.left_apex] > value(fs[w.right], A[w.left_apex]))) return false;
    }
    std::set<size_t> used;
    for (const auto& s : t.simplices) used.insert(s.vertices.begin(), s.vertices.end());
    for (size_t q = 0; q < A.size(); ++q) {
        if (used.count(q)) continue;
        for (size_t i = 0; i < t.simplices.size(); ++i)
            if (!(c.lift[q] > value(fs[i], A[q]))) return false;
    }
    return true;
}

SecondaryVertex characteristic_function(const Triangulation& t) {
    SecondaryVertex sv{std::vector<Integer>(t.base.points().size(), Integer(0)), 1};
    for (size_t i = 0; i < t.simplices.size(); ++i) {
        Integer vol = t.simplex_volume(i);
        for (size_t v : t.simplices[i].vertices) sv.chi[v] += vol;
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), vol.get_mpz_t(), vol.get_ui());
        sv.gkz_coefficient *= p;
    }
    return sv;
}

}  // namespace trmc
