#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "trmc/algebra/series.hpp"
#include "trmc/toric/mori.hpp"

namespace trmc {

// H is ample iff its support function is strictly convex: on every max cone
// the linear function m_sigma matching -c there is strictly above -c elsewhere.
bool is_ample(const ToricVariety& v, const DivisorClass& H);
DivisorClass ample_class(const MoriCone& k);  // sum of the nef generators

struct MPCoordinate {
    size_t ray;   // j, a ray of the base fan
    long copy;    // 0 <= i <= b_j
    bool operator==(const MPCoordinate& o) const { return ray == o.ray && copy == o.copy; }
};

struct MPPolytope {
    CurveClass beta;
    bool empty = false;
    std::vector<size_t> positive, negative, degenerate;
    std::vector<MPCoordinate> coords;             // one per copy of each j with b_j >= 0
    std::vector<std::vector<Rational>> vertices;  // in coords
    std::vector<size_t> facets;                   // indices into coords
    IntegerMatrix lattice_basis;                  // rows: Z-basis of the affine-span lattice
    size_t dim = 0;
};

MPPolytope build_mp_polytope(const ToricVariety& v, const DivisorClass& H, const CurveClass& beta);

struct MPSpace {
    CurveClass beta;
    bool empty = false;
    std::shared_ptr<const ToricVariety> variety;  // null when empty
    std::vector<MPCoordinate> ray_index;
    std::vector<size_t> negative, degenerate;
    RationalMatrix psi;                   // r x r_beta, images of the base Pic basis
    std::vector<DivisorClass> psi_divisors;  // psi[D_j] for every base ray j

    size_t dim() const { return variety ? variety->dim() : 0; }
};

MPSpace mp_space(const ToricVariety& v, const DivisorClass& H, const CurveClass& beta);

// Phi_beta as a polynomial in the Pic variables of the moduli space.
MultiPoly mp_class(const MPSpace& m);

// Integral over the moduli space of P(psi[D_1],...,psi[D_n]) * Phi_beta; 0 when empty.
Rational intersection_coefficient(const MPSpace& m, const MultiPoly& p);

}  // namespace trmc
