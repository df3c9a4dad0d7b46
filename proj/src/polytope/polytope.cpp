#include "trmc/polytope/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "trmc/algebra/matrix.hpp"
#include "trmc/errors.hpp"
#include "trmc/util/subsets.hpp"

namespace trmc {

long dot(const std::vector<long>& a, const LatticePoint& m) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * m[i];
    return s;
}

namespace {

Integer binom_size(size_t n, size_t k) { return binomial(Integer(static_cast<long>(n)), static_cast<long>(k)); }

}  // namespace

size_t affine_rank(const std::vector<LatticePoint>& pts) {
    if (pts.size() <= 1) return 0;
    IntegerMatrix m(pts.size() - 1, pts[0].size());
    for (size_t i = 1; i < pts.size(); ++i)
        for (size_t j = 0; j < pts[0].size(); ++j) m(i - 1, j) = pts[i][j] - pts[0][j];
    return rank(m);
}

LatticePolytope LatticePolytope::from_points(std::vector<LatticePoint> points) {
    if (points.empty()) throw InputError("polytope needs at least one point");
    const size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw InputError("points of different dimensions");
    if (d == 0) throw InputError("zero-dimensional ambient lattice");
    if (d > kMaxHullDimension)
        throw CapacityError("convex hull refused for dimension " + std::to_string(d) + " > 6");
    if (affine_rank(points) != d) throw InputError("polytope is not full-dimensional");
    if (binom_size(points.size(), d) > 2000000) throw CapacityError("too many points for exact facet enumeration");

    LatticePolytope P;
    P.dim_ = d;
    P.points_ = points;
    std::set<std::pair<std::vector<long>, long>> seen;
    for_each_subset(points.size(), d, [&](const std::vector<size_t>& idx) {
        RationalMatrix m(d - 1, d);
        for (size_t i = 1; i < d; ++i)
            for (size_t j = 0; j < d; ++j) m(i - 1, j) = points[idx[i]][j] - points[idx[0]][j];
        auto ns = nullspace(m);
        if (ns.size() != 1) return true;  // affinely dependent subset
        auto prim = primitive_integer(ns[0]);
        std::vector<long> n(d);
        for (size_t j = 0; j < d; ++j) n[j] = prim[j].get_si();
        long c = dot(n, points[idx[0]]);
        bool pos = false, neg = false;
        for (const auto& p : points) {
            long v = dot(n, p) - c;
            pos |= v > 0;
            neg |= v < 0;
        }
        if (pos && neg) return true;
        if (neg) {
            for (auto& x : n) x = -x;
            c = -c;
        }
        if (seen.insert({n, c}).second) P.facets_.push_back({n, -c});
        return true;
    });
    std::sort(P.facets_.begin(), P.facets_.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    // vertices: points whose tight facets have normals of full rank
    std::set<LatticePoint> taken;
    for (size_t i = 0; i < points.size(); ++i) {
        std::vector<std::vector<Rational>> tight;
        for (const auto& f : P.facets_)
            if (dot(f.normal, points[i]) == -f.offset)
                tight.emplace_back(f.normal.begin(), f.normal.end());
        if (tight.size() < d) continue;
        if (rank(RationalMatrix::from_rows(tight)) == d && taken.insert(points[i]).second)
            P.vertices_.push_back(i);
    }
    return P;
}

std::vector<LatticePoint> LatticePolytope::vertices() const {
    std::vector<LatticePoint> v;
    for (size_t i : vertices_) v.push_back(points_[i]);
    return v;
}

bool LatticePolytope::contains(const LatticePoint& m, long dilation) const {
    for (const auto& f : facets_)
        if (dot(f.normal, m) < -f.offset * dilation) return false;
    return true;
}

bool LatticePolytope::origin_in_interior() const {
    for (const auto& f : facets_)
        if (f.offset <= 0) return false;
    return true;
}

std::vector<LatticePoint> dilate_points(const LatticePolytope& p, long k) {
    if (k < 0) throw InputError("negative dilation");
    const size_t d = p.dim();
    if (k == 0) {
        // kP = {0} for polytopes containing the origin; otherwise the single point 0 is still the dilate
        return {LatticePoint(d, 0)};
    }
    LatticePoint lo(d), hi(d);
    for (size_t j = 0; j < d; ++j) {
        lo[j] = hi[j] = p.points()[p.vertex_indices()[0]][j] * static_cast<int>(k);
        for (size_t v : p.vertex_indices()) {
            lo[j] = std::min<int>(lo[j], p.points()[v][j] * static_cast<int>(k));
            hi[j] = std::max<int>(hi[j], p.points()[v][j] * static_cast<int>(k));
        }
    }
    std::vector<LatticePoint> out;
    LatticePoint m = lo;
    for (;;) {
        if (p.contains(m, k)) out.push_back(m);
        size_t j = 0;
        while (j < d && m[j] == hi[j]) {
            m[j] = lo[j];
            ++j;
        }
        if (j == d) break;
        ++m[j];
    }
    std::sort(out.begin(), out.end(), GradedLex());
    return out;
}

bool is_reflexive(const LatticePolytope& p) {
    if (!p.origin_in_interior()) return false;
    for (const auto& f : p.facets())
        if (f.offset != 1) return false;
    return true;
}

LatticePolytope polar_dual(const LatticePolytope& p) {
    if (!is_reflexive(p)) throw InputError("polar dual requested for a non-reflexive polytope");
    std::vector<LatticePoint> verts;
    for (const auto& f : p.facets()) verts.emplace_back(f.normal.begin(), f.normal.end());
    return LatticePolytope::from_points(verts);
}

Integer simplex_volume(const std::vector<LatticePoint>& v) {
    if (v.empty()) return 0;
    const size_t d = v[0].size();
    if (v.size() != d + 1) throw InputError("simplex needs d+1 vertices");
    IntegerMatrix m(d, d);
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = 0; j < d; ++j) m(i - 1, j) = v[i][j] - v[0][j];
    return abs(determinant(m));
}

std::vector<std::vector<size_t>> lifting_triangulation(const std::vector<LatticePoint>& points) {
    const size_t d = points.at(0).size();
    if (affine_rank(points) != d) throw InputError("lifting triangulation needs a full-dimensional point set");
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<long> h(points.size());
        for (auto& x : h) x = std::uniform_int_distribution<long>(1, 1000003)(rng);
        std::vector<std::vector<size_t>> cells;
        bool degenerate = false;
        for_each_subset(points.size(), d + 1, [&](const std::vector<size_t>& idx) {
            // hyperplane x_{d+1} = <a, x> + b through the lifted subset
            RationalMatrix m(d + 1, d + 1);
            std::vector<Rational> rhs(d + 1);
            for (size_t i = 0; i <= d; ++i) {
                for (size_t j = 0; j < d; ++j) m(i, j) = points[idx[i]][j];
                m(i, d) = 1;
                rhs[i] = h[idx[i]];
            }
            if (determinant(m) == 0) return true;
            auto sol = *solve(m, rhs);
            bool lower = true;
            for (size_t k = 0; k < points.size() && lower; ++k) {
                if (std::find(idx.begin(), idx.end(), k) != idx.end()) continue;
                Rational plane = sol[d];
                for (size_t j = 0; j < d; ++j) plane += sol[j] * points[k][j];
                if (h[k] < plane) lower = false;
                else if (h[k] == plane) degenerate = true;
            }
            if (lower) cells.push_back(idx);
            return !degenerate;
        });
        if (!degenerate) return cells;
    }
    throw InternalError("could not find a generic lifting");
}

Integer normalized_volume(const LatticePolytope& p) {
    Integer vol = 0;
    auto verts = p.vertices();
    for (const auto& cell : lifting_triangulation(verts)) {
        std::vector<LatticePoint> s;
        for (size_t i : cell) s.push_back(verts[i]);
        vol += simplex_volume(s);
    }
    return vol;
}

}  // namespace trmc
