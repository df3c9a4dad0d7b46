#include "trmc/residues/closed_forms.hpp"

#include <numeric>

#include "trmc/errors.hpp"

namespace trmc {

WeightedData weighted_data(const std::vector<long>& w) {
    if (w.empty()) throw InputError("weights are empty");
    long g = 0, s = 0;
    for (long x : w) {
        if (x <= 0) throw InputError("weights must be positive");
        g = std::gcd(g, x);
        s += x;
    }
    if (g != 1) throw InputError("weights are not coprime");
    WeightedData out{1, ipow(Integer(s), static_cast<unsigned long>(s))};
    for (long x : w) {
        if (s % x) throw InputError("weight " + std::to_string(x) + " does not divide " + std::to_string(s));
        out.nu /= x;
        out.mu /= ipow(Integer(x), static_cast<unsigned long>(x));
    }
    return out;
}

namespace {

Rational value_at_weights(const std::vector<long>& w, const MultiPoly& p) {
    if (p.nvars() != w.size()) throw InputError("polynomial needs one variable per weight");
    std::vector<Rational> pt(w.begin(), w.end());
    return p.eval(pt);
}

}  // namespace

RationalFunctionMV wp_residue(const std::vector<long>& w, const MultiPoly& p) {
    auto wd = weighted_data(w);
    auto y = indexed_vars("y", 1);
    MultiPoly num = MultiPoly::constant(y, wd.nu * value_at_weights(w, p));
    MultiPoly den = MultiPoly::constant(y, 1);
    den += MultiPoly::monomial(y, {1}, Rational(-wd.mu));
    return RationalFunctionMV(num, den);
}

TruncatedSeries wp_series(const std::vector<long>& w, const MultiPoly& p, long bound) {
    auto wd = weighted_data(w);
    Rational c = wd.nu * value_at_weights(w, p);
    TruncatedSeries s(indexed_vars("y", 1), bound);
    Integer m = 1;
    for (long b = 0; b <= bound; ++b, m *= wd.mu) s.add_term({static_cast<int>(b)}, c * m);
    return s;
}

TruncatedSeries product_series(const std::vector<long>& dims, const std::vector<long>& k, long bound) {
    if (dims.size() != k.size() || dims.empty()) throw InputError("need one exponent per factor");
    long d = 0, ksum = 0;
    for (size_t j = 0; j < dims.size(); ++j) {
        if (dims[j] <= 0 || k[j] < 0) throw InputError("factor dimensions must be positive and exponents nonnegative");
        d += dims[j];
        ksum += k[j];
    }
    const long shift = d - ksum;
    if (shift != 0 && shift != 1) throw InputError("exponents must sum to d or d - 1");
    const size_t r = dims.size();
    Rational pre = 1;
    for (size_t j = 0; j < r; ++j) pre *= pow(Rational(dims[j] + 1), dims[j] - k[j]);

    TruncatedSeries s(indexed_vars("u", r), bound);
    if (bound < 0) return s;
    Exponent b(r, 0);
    for (;;) {
        long total = 0, deg = 0;
        for (size_t j = 0; j < r; ++j) {
            total += (dims[j] + 1) * b[j];
            deg += b[j];
        }
        if (deg <= bound) {
            Rational term = pre * Rational(factorial(total + shift));
            bool zero = false;
            for (size_t j = 0; j < r; ++j) {
                long m = (dims[j] + 1) * b[j] + dims[j] - k[j];
                if (m < 0) zero = true;
                else term /= Rational(factorial(m));
            }
            if (!zero) s.add_term(b, term);
        }
        size_t j = 0;
        while (j < r && b[j] == bound) b[j++] = 0;
        if (j == r) break;
        ++b[j];
    }
    return s;
}

}  // namespace trmc
