#pragma once

#include <vector>

#include "trmc/algebra/multipoly.hpp"

namespace trmc {

using LatticePoint = Exponent;  // points double as Laurent exponents t^m

// <m, normal> >= -offset, normal primitive
struct Facet {
    std::vector<long> normal;
    long offset = 0;
    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

long dot(const std::vector<long>& a, const LatticePoint& m);
size_t affine_rank(const std::vector<LatticePoint>& pts);

class LatticePolytope {
public:
    // Convex hull of `points` (which become the point set A). Full-dimensional only.
    static LatticePolytope from_points(std::vector<LatticePoint> points);

    size_t dim() const { return dim_; }
    const std::vector<LatticePoint>& points() const { return points_; }
    const std::vector<size_t>& vertex_indices() const { return vertices_; }
    std::vector<LatticePoint> vertices() const;
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const LatticePoint& m, long dilation = 1) const;
    bool origin_in_interior() const;

private:
    size_t dim_ = 0;
    std::vector<LatticePoint> points_;
    std::vector<size_t> vertices_;
    std::vector<Facet> facets_;
};

constexpr size_t kMaxHullDimension = 6;

std::vector<LatticePoint> dilate_points(const LatticePolytope& p, long k);
bool is_reflexive(const LatticePolytope& p);
LatticePolytope polar_dual(const LatticePolytope& p);

Integer simplex_volume(const std::vector<LatticePoint>& vertices);  // |det| of edge vectors; 0 if degenerate
Integer normalized_volume(const LatticePolytope& p);

// Simplices (index lists into `points`) of a regular triangulation of the
// convex hull using only the given points, from a generic lifting.
std::vector<std::vector<size_t>> lifting_triangulation(const std::vector<LatticePoint>& points);

}  // namespace trmc
