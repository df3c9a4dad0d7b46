#pragma once

#include <vector>

#include "trmc/algebra/series.hpp"

namespace trmc {

struct WeightedData {
    Rational nu;  // 1 / prod w_i
    Integer mu;   // (sum w)^{sum w} / prod w_i^{w_i}
};

// Requires gcd(w) = 1 and w_i | sum w.
WeightedData weighted_data(const std::vector<long>& w);

// nu P(w) / (1 - mu y) in the single variable y.
RationalFunctionMV wp_residue(const std::vector<long>& w, const MultiPoly& p);
TruncatedSeries wp_series(const std::vector<long>& w, const MultiPoly& p, long bound);

// Series in u_j = n_j^{n_j} y_j (n_j = d_j + 1) for the monomial with k_j the
// total exponent on the j-th factor. sum k = d gives I_{x^k}; sum k = d - 1 gives
// the Yukawa function of Q = x^k, whose factorial numerator is shifted by one.
// 1/m! is taken as 0 for m < 0.
TruncatedSeries product_series(const std::vector<long>& dims, const std::vector<long>& k, long bound);

}  // namespace trmc
