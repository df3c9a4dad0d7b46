#pragma once

#include <string>
#include <vector>

#include "trmc/toric/variety.hpp"

namespace trmc {

struct MoriCone {
    std::vector<CurveClass> generators;
    std::vector<DivisorClass> nef_generators;
    std::vector<std::string> warnings;
    bool simplicial() const;
};

// Wall relation of a fan wall: primitive, positive on the two opposite rays.
CurveClass wall_relation(const ToricVariety& v, const Fan::Wall& w);

MoriCone mori_cone(const ToricVariety& v);

// The class pairing to 1 with every generator of a simplicial Mori cone, otherwise
// the sum of the nef generators.
DivisorClass default_polarization(const ToricVariety& v, const MoriCone& k);

// Integral classes in the Mori cone with 0 <= (H, beta) <= bound, sorted by
// degree then lexicographically.
std::vector<CurveClass> enumerate_mori_points(const ToricVariety& v, const MoriCone& k, const DivisorClass& H,
                                              long bound);

}  // namespace trmc
