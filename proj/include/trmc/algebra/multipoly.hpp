#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "trmc/algebra/rational.hpp"

namespace trmc {

using Exponent = std::vector<int>;

long total_degree(const Exponent& e);

// Total degree first, then reverse lexicographic on the raw vector so that
// y1 sorts before y2 within a degree.
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

using Vars = std::shared_ptr<const std::vector<std::string>>;

Vars make_vars(std::vector<std::string> names);
Vars indexed_vars(const std::string& stem, size_t count);  // stem1..stemN
bool same_vars(const Vars& a, const Vars& b);

class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GradedLex>;

    MultiPoly();
    explicit MultiPoly(Vars vars);

    static MultiPoly constant(Vars vars, const Rational& c);
    static MultiPoly variable(Vars vars, size_t index);
    static MultiPoly monomial(Vars vars, Exponent e, const Rational& c = 1);

    const Vars& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c);
    Rational coeff(const Exponent& e) const;
    Rational constant_term() const;

    long max_degree() const;            // -1 for the zero polynomial
    bool is_homogeneous(long degree) const;
    bool has_negative_exponents() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly shifted(const Exponent& by, const Rational& c = 1) const;  // multiply by c*x^by
    MultiPoly pow(unsigned k) const;

    // Laurent exponents require nonzero values at negatively exponentiated variables.
    Rational eval(const std::vector<Rational>& point) const;

    // x_i -> images[i]; negative exponents allowed only where the image is a single term.
    MultiPoly substitute(const std::vector<MultiPoly>& images, const Vars& target) const;

    // Same polynomial viewed over another variable list of equal length.
    MultiPoly renamed(const Vars& target) const;

    std::string to_string() const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
    void require_compatible(const MultiPoly& o, const char* op) const;

    Vars vars_;
    Terms terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const Rational& c);
MultiPoly operator*(const Rational& c, MultiPoly a);

enum class PolyOp { Add, Mul };
MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, PolyOp op);

std::string monomial_string(const std::vector<std::string>& names, const Exponent& e);

}  // namespace trmc
