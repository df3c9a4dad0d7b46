#include "trmc/algebra/series.hpp"

#include <optional>

#include "trmc/errors.hpp"

namespace trmc {

TruncatedSeries::TruncatedSeries(Vars vars, long order) : vars_(std::move(vars)), order_(order) {
    if (order < 0) throw InputError("series order must be nonnegative");
}

TruncatedSeries TruncatedSeries::from_poly(const MultiPoly& p, long order) {
    TruncatedSeries s(p.vars(), order);
    for (const auto& [e, c] : p.terms()) s.add_term(e, c);
    return s;
}

void TruncatedSeries::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars()) throw InputError("series exponent has wrong length");
    for (int x : e)
        if (x < 0) throw InputError("power series term with a negative exponent");
    if (total_degree(e) > order_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TruncatedSeries::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const { return coeff(Exponent(nvars(), 0)); }

TruncatedSeries TruncatedSeries::truncated(long order) const {
    TruncatedSeries s(vars_, std::min(order, order_));
    for (const auto& [e, c] : terms_) s.add_term(e, c);
    return s;
}

MultiPoly TruncatedSeries::to_poly() const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) p.add_term(e, c);
    return p;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o) const {
    if (!same_vars(vars_, o.vars_)) throw InputError("incompatible series variables");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_compatible(o);
    order_ = std::min(order_, o.order_);
    *this = truncated(order_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

std::string TruncatedSeries::to_string() const {
    return to_poly().to_string() + " + O(" + std::to_string(order_ + 1) + ")";
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return same_vars(vars_, o.vars_) && order_ == o.order_ && terms_ == o.terms_;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!same_vars(a.vars(), b.vars())) throw InputError("incompatible series variables");
    long K = std::min(a.order(), b.order());
    TruncatedSeries r(a.vars(), K);
    Exponent f(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        long da = total_degree(ea);
        if (da > K) break;  // graded order: the rest is higher
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total_degree(eb) > K) break;
            for (size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
            r.add_term(f, ca * cb);
        }
    }
    return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    Rational c0 = s.constant_term();
    if (c0 == 0) throw ArithmeticError("series inverse needs a nonzero constant term");
    // 1/s = (1/c0) * sum_i (-t)^i with t = s/c0 - 1
    TruncatedSeries t = s;
    t *= 1 / c0;
    t.add_term(Exponent(s.nvars(), 0), -1);
    TruncatedSeries minus_t = -t;
    TruncatedSeries sum(s.vars(), s.order());
    sum.add_term(Exponent(s.nvars(), 0), 1);
    TruncatedSeries power = sum;
    for (long i = 1; i <= s.order(); ++i) {
        power = power * minus_t;
        if (power.terms().empty()) break;
        sum += power;
    }
    sum *= 1 / c0;
    return sum;
}

RationalFunctionMV::RationalFunctionMV(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (!same_vars(num_.vars(), den_.vars())) throw InputError("numerator and denominator use different variables");
}

Rational RationalFunctionMV::eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) throw ArithmeticError("denominator vanishes at the evaluation point");
    return num_.eval(point) / d;
}

std::string RationalFunctionMV::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

TruncatedSeries laurent_expand_at_vertex(const RationalFunctionMV& r, long order) {
    if (r.den().constant_term() == 0)
        throw ArithmeticError("denominator has no constant term: wrong coordinates for this vertex");
    if (r.den().has_negative_exponents() || r.num().has_negative_exponents())
        throw ArithmeticError("negative exponents after change of coordinates: not a vertex expansion");
    TruncatedSeries den = TruncatedSeries::from_poly(r.den(), order);
    TruncatedSeries num = TruncatedSeries::from_poly(r.num(), order);
    return num * series_inverse(den);
}

namespace {

// lambda with generators^T * lambda = e, integral; nullopt if none.
std::optional<Exponent> express(const RationalMatrix& gt, const Exponent& e) {
    std::vector<Rational> b(e.begin(), e.end());
    auto sol = solve(gt, b);
    if (!sol) return std::nullopt;
    Exponent out;
    for (const auto& x : *sol) {
        if (x.get_den() != 1 || !x.get_num().fits_sint_p()) return std::nullopt;
        out.push_back(static_cast<int>(x.get_num().get_si()));
    }
    return out;
}

std::optional<MultiPoly> rewrite(const MultiPoly& p, const RationalMatrix& gt, const Exponent& clear,
                                 const Vars& new_vars) {
    MultiPoly out(new_vars);
    for (const auto& [e, c] : p.terms()) {
        Exponent shifted = e;
        for (size_t i = 0; i < e.size(); ++i) shifted[i] -= clear[i];
        auto lam = express(gt, shifted);
        if (!lam) return std::nullopt;
        out.add_term(*lam, c);
    }
    return out;
}

}  // namespace

SubstitutionResult monomial_substitution(const RationalFunctionMV& r, const IntegerMatrix& generators,
                                         const Vars& new_vars, const Exponent* clear) {
    const size_t n = r.vars()->size();
    if (generators.cols() != n) throw InputError("generator length does not match the number of variables");
    if (new_vars->size() != generators.rows()) throw InputError("one new variable per generator required");
    if (rank(generators) != generators.rows()) throw InputError("substitution generators are linearly dependent");
    RationalMatrix gt = to_rational(generators.transpose());

    std::vector<Exponent> candidates;
    if (clear) {
        candidates.push_back(*clear);
    } else {
        candidates.push_back(Exponent(n, 0));
        for (const auto& [e, c] : r.den().terms()) candidates.push_back(e);
    }
    for (const auto& s : candidates) {
        auto num = rewrite(r.num(), gt, s, new_vars);
        if (!num) continue;
        auto den = rewrite(r.den(), gt, s, new_vars);
        if (!den) continue;
        return {RationalFunctionMV(*num, *den), s};
    }
    throw InputError("exponent not expressible in the given generators: wrong Mori generators for this scenario");
}

}  // namespace trmc
