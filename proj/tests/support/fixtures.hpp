#pragma once

#include "doctest.h"
#include "trmc/algebra/series.hpp"
#include "trmc/toric/mori.hpp"

namespace trmc::fixtures {

inline Triangulation hirzebruch_triangulation() {
    auto p = LatticePolytope::from_points({{0, 0}, {-1, 1}, {0, -1}, {1, 0}, {0, 1}});
    return Triangulation::make(p, {{0, 3, 4}, {0, 4, 1}, {0, 1, 2}, {0, 2, 3}});
}

inline LatticePolytope flop_polytope() {
    return LatticePolytope::from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {1, 1, -1}});
}

inline Triangulation flop_triangulation(int which) {
    if (which == 1)
        return Triangulation::make(flop_polytope(),
                                   {{0, 1, 2, 4}, {0, 1, 2, 5}, {0, 1, 3, 4}, {0, 1, 3, 5}, {0, 2, 3, 5}, {0, 2, 3, 4}});
    return Triangulation::make(flop_polytope(),
                               {{0, 1, 4, 5}, {0, 2, 4, 5}, {0, 1, 3, 4}, {0, 1, 3, 5}, {0, 2, 3, 5}, {0, 2, 3, 4}});
}

// P(w_1..w_n) with w_1 = 1: v_1 = -(w_2..w_n), v_{i} = e_{i-1}.
inline Triangulation weighted_projective_triangulation(const std::vector<int>& w) {
    const size_t d = w.size() - 1;
    std::vector<LatticePoint> pts{LatticePoint(d, 0)};
    LatticePoint v1(d);
    for (size_t i = 0; i < d; ++i) v1[i] = -w[i + 1];
    pts.push_back(v1);
    for (size_t i = 0; i < d; ++i) {
        LatticePoint e(d, 0);
        e[i] = 1;
        pts.push_back(e);
    }
    std::vector<std::vector<size_t>> simplices;
    for (size_t skip = 1; skip <= d + 1; ++skip) {
        std::vector<size_t> s{0};
        for (size_t i = 1; i <= d + 1; ++i)
            if (i != skip) s.push_back(i);
        simplices.push_back(s);
    }
    return Triangulation::make(LatticePolytope::from_points(pts), simplices);
}

// Blow-up of P(1,1,2,2,2) along the singular locus: v_6 = (v_1 + v_2)/2.
inline Triangulation blowup_triangulation() {
    auto p = LatticePolytope::from_points({{0, 0, 0, 0},
                                           {-1, -2, -2, -2},
                                           {1, 0, 0, 0},
                                           {0, 1, 0, 0},
                                           {0, 0, 1, 0},
                                           {0, 0, 0, 1},
                                           {0, -1, -1, -1}});
    return Triangulation::make(p, {{0, 2, 3, 4, 5}, {0, 1, 3, 4, 5}, {0, 1, 6, 4, 5}, {0, 6, 2, 4, 5},
                                   {0, 1, 6, 3, 5}, {0, 6, 2, 3, 5}, {0, 1, 6, 3, 4}, {0, 6, 2, 3, 4}});
}

// P^a x P^b with rays e_i, -sum e_i in each factor.
inline Fan projective_product_fan(size_t a, size_t b) {
    const size_t d = a + b;
    std::vector<LatticePoint> rays;
    auto block = [&](size_t off, size_t n) {
        for (size_t i = 0; i < n; ++i) {
            LatticePoint e(d, 0);
            e[off + i] = 1;
            rays.push_back(e);
        }
        LatticePoint m(d, 0);
        for (size_t i = 0; i < n; ++i) m[off + i] = -1;
        rays.push_back(m);
    };
    block(0, a);
    if (b) block(a, b);
    std::vector<Cone> cones;
    for (size_t s = 0; s <= a; ++s) {
        if (b == 0) {
            Cone c;
            for (size_t i = 0; i <= a; ++i)
                if (i != s) c.push_back(i);
            cones.push_back(c);
            continue;
        }
        for (size_t t = 0; t <= b; ++t) {
            Cone c;
            for (size_t i = 0; i <= a; ++i)
                if (i != s) c.push_back(i);
            for (size_t i = 0; i <= b; ++i)
                if (i != t) c.push_back(a + 1 + i);
            cones.push_back(c);
        }
    }
    return Fan::make(d, rays, cones);
}

inline CurveClass curve(std::initializer_list<long> b) {
    CurveClass c;
    for (long x : b) c.b.push_back(Integer(x));
    return c;
}

struct Term {
    Rational coeff;
    Exponent exps;
};

inline MultiPoly poly(const Vars& vars, std::initializer_list<Term> terms) {
    MultiPoly p(vars);
    for (const auto& t : terms) p.add_term(t.exps, t.coeff);
    return p;
}

}  // namespace trmc::fixtures

namespace doctest {
template <>
struct StringMaker<trmc::TruncatedSeries> {
    static String convert(const trmc::TruncatedSeries& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<trmc::MultiPoly> {
    static String convert(const trmc::MultiPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<trmc::Rational> {
    static String convert(const trmc::Rational& q) { return trmc::to_string(q).c_str(); }
};
}  // namespace doctest
