#pragma once

#include <string>
#include <vector>

#include "trmc/algebra/matrix.hpp"
#include "trmc/algebra/multipoly.hpp"

namespace trmc {

// Power series truncated at total degree `order`.
class TruncatedSeries {
public:
    using Terms = MultiPoly::Terms;

    TruncatedSeries(Vars vars, long order);
    static TruncatedSeries from_poly(const MultiPoly& p, long order);

    const Vars& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    long order() const { return order_; }
    const Terms& terms() const { return terms_; }

    void add_term(const Exponent& e, const Rational& c);  // silently drops degree > order
    Rational coeff(const Exponent& e) const;
    Rational constant_term() const;

    TruncatedSeries truncated(long order) const;
    MultiPoly to_poly() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);

    std::string to_string() const;
    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    void require_compatible(const TruncatedSeries& o) const;

    Vars vars_;
    long order_;
    Terms terms_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);  // order = min of both

TruncatedSeries series_inverse(const TruncatedSeries& s);

class RationalFunctionMV {
public:
    RationalFunctionMV(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const Vars& vars() const { return num_.vars(); }

    Rational eval(const std::vector<Rational>& point) const;  // error on a zero denominator
    std::string to_string() const;

private:
    MultiPoly num_, den_;
};

// Requires den(0) != 0, i.e. the vertex of interest already sits at the origin.
TruncatedSeries laurent_expand_at_vertex(const RationalFunctionMV& r, long order);

struct SubstitutionResult {
    RationalFunctionMV function;
    Exponent cleared;  // a^cleared divided out of numerator and denominator
};

// Rewrites r(a) in variables y_k = a^{row k of generators}. When `clear` is
// given, numerator and denominator are first divided by a^clear; otherwise a
// clearing monomial is searched among the denominator's exponents if needed.
SubstitutionResult monomial_substitution(const RationalFunctionMV& r, const IntegerMatrix& generators,
                                         const Vars& new_vars, const Exponent* clear = nullptr);

}  // namespace trmc
