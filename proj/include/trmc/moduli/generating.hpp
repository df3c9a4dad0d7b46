#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trmc/moduli/mp_space.hpp"

namespace trmc {

struct CoefficientTable {
    DivisorClass grading;  // the bound applies to <grading, beta>
    long bound = 0;
    std::vector<std::pair<CurveClass, Rational>> entries;  // enumeration order, zeros kept
    // y_k stands for a^{generator k}; present when the Mori cone is simplicial,
    // every beta has integral generator coordinates and the grading is 1 on each generator.
    std::optional<TruncatedSeries> series;

    Rational at(const CurveClass& beta) const;  // 0 when beta was not enumerated
};

struct GeneratingOptions {
    std::optional<DivisorClass> polarization;  // ample class for the moduli polytopes
    std::optional<DivisorClass> grading;       // defaults to default_polarization
    unsigned jobs = 1;
};

// The generators of k fix the order of the series variables y1..yr.
CoefficientTable generating_function(const ToricVariety& v, const MoriCone& k, const MultiPoly& p, long bound,
                                     const GeneratingOptions& opts = {});

}  // namespace trmc
