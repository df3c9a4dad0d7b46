#include "trmc/algebra/unipoly.hpp"

#include "trmc/errors.hpp"

namespace trmc {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(long degree, const Rational& c) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::eval(const Rational& u) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * u + c_[i];
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(-1); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
    std::vector<Rational> rem = c_;
    long dd = d.degree();
    std::vector<Rational> q(std::max<long>(0, degree() - dd + 1), Rational(0));
    for (long k = degree(); k >= dd; --k) {
        Rational f = rem[k] / d.lead();
        if (f == 0) continue;
        q[k - dd] = f;
        for (long i = 0; i <= dd; ++i) rem[k - dd + i] -= f * d.c_[i];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = abs(c_[i]);
        s += s.empty() ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + ");
        if (i == 0) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.scaled(1 / a.lead());
}

UniRationalFunction::UniRationalFunction(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly();
        den_ = UniPoly({Rational(1)});
        return;
    }
    UniPoly g = poly_gcd(num, den);
    num_ = num.divmod(g).first;
    den_ = den.divmod(g).first;
    Rational l = den_.lead();
    num_ = num_.scaled(1 / l);
    den_ = den_.scaled(1 / l);
}

Rational UniRationalFunction::value_at_zero() const {
    if (!regular_at_zero()) throw ArithmeticError("rational function has a pole at u = 0");
    return num_.coeff(0) / den_.coeff(0);
}

Rational UniRationalFunction::eval(const Rational& u) const {
    Rational d = den_.eval(u);
    if (d == 0) throw ArithmeticError("rational function evaluated at a pole");
    return num_.eval(u) / d;
}

TruncatedSeries UniRationalFunction::taylor(const Vars& var, long order) const {
    if (var->size() != 1) throw InputError("univariate expansion needs one variable");
    MultiPoly n(var), d(var);
    for (long i = 0; i <= num_.degree(); ++i) n.add_term({static_cast<int>(i)}, num_.coeff(i));
    for (long i = 0; i <= den_.degree(); ++i) d.add_term({static_cast<int>(i)}, den_.coeff(i));
    return laurent_expand_at_vertex(RationalFunctionMV(n, d), order);
}

std::string UniRationalFunction::to_string(const std::string& var) const {
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

std::optional<UniRationalFunction> fit(const std::vector<Sample>& samples, long D) {
    const size_t unknowns = 2 * static_cast<size_t>(D) + 2;
    RationalMatrix m(samples.size(), unknowns);
    for (size_t r = 0; r < samples.size(); ++r) {
        const auto& [u, v] = samples[r];
        Rational pw = 1;
        for (long i = 0; i <= D; ++i) {
            m(r, i) = pw;
            m(r, D + 1 + i) = -v * pw;
            pw *= u;
        }
    }
    auto ns = nullspace(m);
    if (ns.empty()) return std::nullopt;
    const auto& x = ns.front();
    UniPoly p(std::vector<Rational>(x.begin(), x.begin() + D + 1));
    UniPoly q(std::vector<Rational>(x.begin() + D + 1, x.end()));
    if (q.is_zero()) return std::nullopt;
    return UniRationalFunction(p, q);
}

bool validates(const UniRationalFunction& f, const std::vector<Sample>& held_out) {
    for (const auto& [u, v] : held_out) {
        if (f.den().eval(u) == 0) return false;
        if (f.eval(u) != v) return false;
    }
    return true;
}

constexpr size_t kHeldOut = 3;

}  // namespace

UniRationalFunction rational_reconstruct(const std::vector<Sample>& samples, long degree_bound, long cap) {
    if (degree_bound < 0) throw InputError("negative degree bound");
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first) throw InputError("repeated sample point");
    for (long D = degree_bound;; D = std::max<long>(1, 2 * D)) {
        size_t need = 2 * static_cast<size_t>(D) + 1;
        if (D > cap || samples.size() < need + kHeldOut) break;
        std::vector<Sample> head(samples.begin(), samples.begin() + need);
        std::vector<Sample> tail(samples.begin() + need, samples.end());
        auto f = fit(head, D);
        if (f && validates(*f, tail)) return *f;
    }
    throw ReconstructionError("no rational function of bounded degree fits the samples");
}

UniRationalFunction reconstruct_adaptive(const std::function<std::optional<Rational>(const Rational&)>& sampler,
                                         const std::function<Rational()>& next_point, long initial_bound,
                                         long cap, ReconstructionLog* log) {
    std::vector<Sample> samples;
    std::vector<Rational> skipped;
    size_t consecutive_skips = 0;
    for (long D = std::max<long>(1, initial_bound); D <= cap; D *= 2) {
        size_t need = 2 * static_cast<size_t>(D) + 1 + kHeldOut;
        while (samples.size() < need) {
            Rational u = next_point();
            auto v = sampler(u);
            if (v) {
                samples.emplace_back(u, *v);
                consecutive_skips = 0;
            } else {
                skipped.push_back(u);
                if (++consecutive_skips > 64) throw DegenerateError("too many consecutive degenerate samples");
            }
        }
        std::vector<Sample> head(samples.begin(), samples.begin() + (need - kHeldOut));
        std::vector<Sample> tail(samples.begin() + (need - kHeldOut), samples.end());
        auto f = fit(head, D);
        if (f && validates(*f, tail)) {
            if (log) *log = {D, samples, skipped};
            return *f;
        }
    }
    throw ReconstructionError("degree cap reached without a validated rational function");
}

}  // namespace trmc
