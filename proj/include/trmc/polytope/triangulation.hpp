#pragma once

#include <map>
#include <string>
#include <vector>

#include "trmc/polytope/polytope.hpp"

namespace trmc {

struct Simplex {
    std::vector<size_t> vertices;  // sorted indices into A
};

struct Triangulation {
    LatticePolytope base;  // base.points() is A
    std::vector<Simplex> simplices;

    static Triangulation make(const LatticePolytope& base, std::vector<std::vector<size_t>> simplices);
    std::vector<LatticePoint> simplex_points(size_t i) const;
    Integer simplex_volume(size_t i) const;
};

struct TriangulationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

TriangulationReport validate_triangulation(const Triangulation& t, bool star);

// A codimension-one face shared by two simplices, with the vertex of each
// simplex opposite to it.
struct Wall {
    std::vector<size_t> face;
    size_t left, right;        // simplex indices
    size_t left_apex, right_apex;
};
std::vector<Wall> interior_walls(const Triangulation& t);

struct CoherenceCertificate {
    std::vector<Rational> lift;  // phi on each point of A
};

// Throws GeometryError if no convex lift exists.
CoherenceCertificate coherence_certificate(const Triangulation& t);

// Independent check: strict convexity across every wall and strictly above
// the lift for points of A not used by any simplex.
bool check_certificate(const Triangulation& t, const CoherenceCertificate& c);

struct SecondaryVertex {
    std::vector<Integer> chi;  // indexed like A
    Integer gkz_coefficient;
};
SecondaryVertex characteristic_function(const Triangulation& t);

}  // namespace trmc
