#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trmc/algebra/rational.hpp"

namespace trmc {

// a . x >= b
struct LinearInequality {
    std::vector<Rational> a;
    Rational b;
};
using InequalitySystem = std::vector<LinearInequality>;

// Normalizes rows, merges parallel ones and drops empty rows. Returns false if
// some empty row reads 0 >= b with b > 0.
bool fm_prune(InequalitySystem& s);

// Projects out variable v; the result no longer mentions v. Throws CapacityError
// beyond `max_rows` combined rows.
InequalitySystem fm_eliminate(const InequalitySystem& s, size_t v, size_t max_rows = 200000);

// Bounds on x_v from the rows mentioning v, with every other coordinate taken from x.
std::pair<std::optional<Rational>, std::optional<Rational>> fm_bounds(const InequalitySystem& s, size_t v,
                                                                     const std::vector<Rational>& x);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

}  // namespace trmc
