#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trmc/algebra/series.hpp"

namespace trmc {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);  // coeffs[i] multiplies u^i
    static UniPoly monomial(long degree, const Rational& c = 1);

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(long i) const { return i >= 0 && i <= degree() ? c_[i] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational eval(const Rational& u) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& s) const;
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    std::string to_string(const std::string& var = "u") const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly poly_gcd(UniPoly a, UniPoly b);  // monic, or zero

class UniRationalFunction {
public:
    UniRationalFunction(UniPoly num, UniPoly den);  // reduces and makes den monic

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool regular_at_zero() const { return den_.coeff(0) != 0; }
    Rational value_at_zero() const;
    Rational eval(const Rational& u) const;
    TruncatedSeries taylor(const Vars& var, long order) const;

    std::string to_string(const std::string& var = "u") const;
    bool operator==(const UniRationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    UniPoly num_, den_;
};

using Sample = std::pair<Rational, Rational>;  // (u, value)

// Fits with 2*bound+1 samples, validates on all remaining ones (at least 3),
// doubles the bound on failure up to `cap`.
UniRationalFunction rational_reconstruct(const std::vector<Sample>& samples, long degree_bound, long cap = 64);

// Draws samples lazily from `sampler` at the points produced by `next_point`;
// a sampler returning nullopt marks a skipped (degenerate) point.
struct ReconstructionLog {
    long final_bound = 0;
    std::vector<Sample> samples;
    std::vector<Rational> skipped;
};
UniRationalFunction reconstruct_adaptive(const std::function<std::optional<Rational>(const Rational&)>& sampler,
                                         const std::function<Rational()>& next_point, long initial_bound,
                                         long cap, ReconstructionLog* log = nullptr);

}  // namespace trmc
