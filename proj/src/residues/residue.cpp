#include "trmc/residues/residue.hpp"

#include <algorithm>
#include <functional>

#include "trmc/algebra/matrix.hpp"
#include "trmc/errors.hpp"
#include "trmc/util/subsets.hpp"

namespace trmc {

namespace {

using Laurent = std::map<LatticePoint, Rational>;

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

void accumulate(Laurent& into, const LatticePoint& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = into.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

Laurent multiply(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) accumulate(r, add(ma, mb), ca * cb);
    return r;
}

void next_prime_after(long& q) {
    for (++q;; ++q) {
        bool prime = q > 1;
        for (long f = 2; f * f <= q && prime; ++f) prime = q % f != 0;
        if (prime) return;
    }
}

}  // namespace

ResidueEvaluator::ResidueEvaluator(LatticePolytope polytope, std::vector<LatticePoint> support)
    : delta_(std::move(polytope)), support_(std::move(support)) {
    d_ = delta_.dim();
    if (d_ == 0) throw InputError("residues need a full-dimensional polytope");
    if (!is_reflexive(delta_)) throw InputError("support polytope is not reflexive");
    for (size_t i = 0; i < support_.size(); ++i) {
        if (support_[i].size() != d_) throw InputError("support[" + std::to_string(i) + "] has wrong length");
        if (std::all_of(support_[i].begin(), support_[i].end(), [](int x) { return x == 0; }))
            throw InputError("support[" + std::to_string(i) + "] is the origin");
        if (!delta_.contains(support_[i])) throw InputError("support[" + std::to_string(i) + "] lies outside the polytope");
    }
    top_ = dilate_points(delta_, static_cast<long>(d_));
    below_ = dilate_points(delta_, static_cast<long>(d_) - 1);
    for (size_t k = 0; k < top_.size(); ++k) top_index_[top_[k]] = k;
    volume_ = normalized_volume(delta_);
}

void ResidueEvaluator::check_coefficients(const std::vector<Rational>& a) const {
    if (a.size() != support_.size()) throw InputError("need one coefficient per support point");
}

std::vector<Rational> ResidueEvaluator::dense(const GradedElement& e) const {
    std::vector<Rational> v(top_.size(), Rational(0));
    for (const auto& [m, c] : e) {
        auto it = top_index_.find(m);
        if (it == top_index_.end()) throw InternalError("graded element escapes the top degree piece");
        v[it->second] = c;
    }
    return v;
}

GradedElement ResidueEvaluator::hessian_determinant(const std::vector<Rational>& a) const {
    check_coefficients(a);
    const size_t D = d_ + 1;
    // entry (i, k) = sum_j c_j w_j[i] w_j[k] t^{v_j} with w_j = (1, v_j), c_0 = 1 at v_0 = 0
    std::vector<LatticePoint> pts{LatticePoint(d_, 0)};
    std::vector<Rational> coef{Rational(1)};
    for (size_t j = 0; j < support_.size(); ++j) {
        pts.push_back(support_[j]);
        coef.push_back(-a[j]);
    }
    auto w = [&](size_t j, size_t i) { return i == 0 ? 1 : pts[j][i - 1]; };
    std::vector<std::vector<Laurent>> m(D, std::vector<Laurent>(D));
    for (size_t i = 0; i < D; ++i)
        for (size_t k = 0; k < D; ++k)
            for (size_t j = 0; j < pts.size(); ++j) accumulate(m[i][k], pts[j], coef[j] * w(j, i) * w(j, k));

    // Laplace expansion along rows, memoized on the set of remaining columns
    std::map<unsigned, Laurent> memo;
    std::function<Laurent(size_t, unsigned)> minor = [&](size_t row, unsigned cols) -> Laurent {
        if (row == D) return Laurent{{LatticePoint(d_, 0), Rational(1)}};
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        Laurent out;
        int sign = 1;
        for (size_t c = 0; c < D; ++c) {
            if (!(cols >> c & 1)) continue;
            if (!m[row][c].empty()) {
                for (const auto& [e, x] : multiply(m[row][c], minor(row + 1, cols & ~(1u << c))))
                    accumulate(out, e, sign > 0 ? x : Rational(-x));
            }
            sign = -sign;
        }
        memo[cols] = out;
        return out;
    };
    return minor(0, (1u << D) - 1);
}

GradedElement ResidueEvaluator::hessian_volume_expansion(const std::vector<Rational>& a) const {
    check_coefficients(a);
    std::vector<LatticePoint> pts{LatticePoint(d_, 0)};
    std::vector<Rational> coef{Rational(1)};
    for (size_t j = 0; j < support_.size(); ++j) {
        pts.push_back(support_[j]);
        coef.push_back(-a[j]);
    }
    GradedElement out;
    for_each_subset(pts.size(), d_ + 1, [&](const std::vector<size_t>& J) {
        IntegerMatrix w(d_ + 1, d_ + 1);
        for (size_t r = 0; r <= d_; ++r) {
            w(r, 0) = 1;
            for (size_t c = 0; c < d_; ++c) w(r, c + 1) = pts[J[r]][c];
        }
        Integer v = determinant(w);
        if (v == 0) return true;
        Rational c = Rational(v * v);
        LatticePoint m(d_, 0);
        for (size_t j : J) {
            c *= coef[j];
            m = add(m, pts[j]);
        }
        accumulate(out, m, c);
        return true;
    });
    return out;
}

GradedElement ResidueEvaluator::hessian(const std::vector<Rational>& a) const {
    auto h = hessian_determinant(a);
    if (h != hessian_volume_expansion(a)) throw InternalError("Hessian formulas disagree");
    for (const auto& [m, c] : h)
        if (!top_index_.count(m)) throw InternalError("Hessian support escapes d*Delta");
    return h;
}

GradedElement ResidueEvaluator::generator(const std::vector<Rational>& a, size_t i) const {
    check_coefficients(a);
    GradedElement g;
    if (i == 0) accumulate(g, LatticePoint(d_, 0), 1);
    for (size_t j = 0; j < support_.size(); ++j)
        accumulate(g, support_[j], i == 0 ? Rational(-a[j]) : Rational(-a[j] * support_[j][i - 1]));
    return g;
}

GradedElement ResidueEvaluator::embed(const std::vector<Rational>& a, const MultiPoly& p) const {
    check_coefficients(a);
    if (p.nvars() != support_.size()) throw InputError("polynomial needs one variable per support point");
    if (!p.is_zero() && !p.is_homogeneous(static_cast<long>(d_)))
        throw InputError("polynomial must be homogeneous of degree " + std::to_string(d_));
    GradedElement out;
    for (const auto& [e, c] : p.terms()) {
        LatticePoint m(d_, 0);
        Rational x = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) throw InputError("polynomial has negative exponents");
            x *= pow(a[i], e[i]);
            for (size_t k = 0; k < d_; ++k) m[k] += e[i] * support_[i][k];
        }
        accumulate(out, m, x);
    }
    return out;
}

Rational ResidueEvaluator::residue(const std::vector<Rational>& a, const GradedElement& top) const {
    const size_t N = top_.size();
    RowSpace span(N);
    for (size_t i = 0; i <= d_; ++i) {
        auto g = generator(a, i);
        for (const auto& m : below_) {
            std::vector<Rational> v(N, Rational(0));
            for (const auto& [e, c] : g) v[top_index_.at(add(e, m))] = c;
            span.insert(v);
            if (span.rank() == N) throw DegenerateError("Delta-degenerate coefficients: the ideal fills the top degree");
        }
    }
    if (span.rank() != N - 1) throw DegenerateError("Delta-degenerate coefficients: the quotient is not one-dimensional");
    const size_t free = span.non_pivot_columns().front();
    auto h = span.reduce(dense(hessian(a)));
    if (h[free] == 0) throw DegenerateError("Delta-degenerate coefficients: the Hessian lies in the ideal");
    auto p = span.reduce(dense(top));
    return p[free] / h[free] * Rational(volume_);
}

Rational ResidueEvaluator::evaluate(const std::vector<Rational>& a, const MultiPoly& p) const {
    Rational r = residue(a, embed(a, p));
    return d_ % 2 ? Rational(-r) : r;
}

GradedElement hessian(const ResidueInput& in) {
    return ResidueEvaluator(in.polytope, in.support).hessian(in.coefficients);
}

Rational residue_eval(const ResidueInput& in, const MultiPoly& p) {
    return ResidueEvaluator(in.polytope, in.support).evaluate(in.coefficients, p);
}

CurveResult residue_curve(const ResidueEvaluator& ev, const CurveSpec& spec, const MultiPoly& p, long sample_budget) {
    if (spec.direction.size() != ev.n() || spec.exponents.size() != ev.n())
        throw InputError("curve needs one direction and exponent per support point");
    long q = 10;
    auto next_point = [&] {
        next_prime_after(q);
        return make_rational(1, q);
    };
    auto sampler = [&](const Rational& u) -> std::optional<Rational> {
        std::vector<Rational> a(ev.n());
        for (size_t i = 0; i < ev.n(); ++i) a[i] = spec.direction[i] * pow(u, spec.exponents[i]);
        try {
            return ev.evaluate(a, p);
        } catch (const DegenerateError&) {
            return std::nullopt;
        }
    };
    long cap = std::max<long>(1, (sample_budget - 4) / 2);
    CurveResult out{UniRationalFunction(UniPoly({Rational(0)}), UniPoly({Rational(1)})), {}};
    out.function = reconstruct_adaptive(sampler, next_point, 2, cap, &out.log);
    if (!out.function.regular_at_zero()) throw ReconstructionError("reconstructed residue has a pole at u = 0");
    return out;
}

MultiPoly yukawa_polynomial(const MultiPoly& q) {
    MultiPoly sum(q.vars());
    for (size_t i = 0; i < q.nvars(); ++i) sum += MultiPoly::variable(q.vars(), i);
    return sum * q;
}

}  // namespace trmc
