#include "trmc/toric/mori.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "trmc/algebra/fourier_motzkin.hpp"
#include "trmc/errors.hpp"
#include "trmc/util/subsets.hpp"

namespace trmc {

bool MoriCone::simplicial() const {
    return !nef_generators.empty() && generators.size() == nef_generators.front().coords.size();
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

CurveClass wall_relation(const ToricVariety& v, const Fan::Wall& w) {
    const auto& rays = v.fan().rays();
    std::vector<size_t> idx = w.face;
    idx.push_back(w.left_apex);
    idx.push_back(w.right_apex);
    RationalMatrix m(v.dim(), idx.size());
    for (size_t c = 0; c < idx.size(); ++c)
        for (size_t j = 0; j < v.dim(); ++j) m(j, c) = rays[idx[c]][j];
    auto ns = nullspace(m);
    if (ns.size() != 1) throw GeometryError("wall rays do not satisfy a unique relation");
    auto prim = primitive_integer(ns[0]);
    if (prim[prim.size() - 2] < 0)
        for (auto& x : prim) x = -x;
    if (prim[prim.size() - 2] <= 0 || prim.back() <= 0) throw GeometryError("rays opposite a wall are not separated by it");
    CurveClass c{std::vector<Integer>(v.n_rays(), Integer(0))};
    for (size_t k = 0; k < idx.size(); ++k) c.b[idx[k]] = prim[k];
    return c;
}

MoriCone mori_cone(const ToricVariety& v) {
    const size_t r = v.pic_rank();
    std::set<CurveClass> walls;
    for (const auto& w : v.fan().walls()) walls.insert(wall_relation(v, w));
    std::vector<CurveClass> gens(walls.begin(), walls.end());
    std::vector<std::vector<Rational>> mu;
    for (const auto& g : gens) mu.push_back(v.curve_coords(g));
    if (rank(RationalMatrix::from_rows(mu)) != r) throw GeometryError("wall classes do not span the relation space");

    MoriCone k;
    std::set<std::vector<Integer>> seen;
    for_each_subset(gens.size(), r - 1, [&](const std::vector<size_t>& sel) {
        RationalMatrix m(sel.size(), r);
        for (size_t i = 0; i < sel.size(); ++i)
            for (size_t j = 0; j < r; ++j) m(i, j) = mu[sel[i]][j];
        auto ns = nullspace(m);
        if (ns.size() != 1) return true;
        bool pos = false, neg = false;
        for (const auto& x : mu) {
            Rational p = dot(ns[0], x);
            pos |= p > 0;
            neg |= p < 0;
        }
        if (pos && neg) return true;
        auto prim = primitive_integer(ns[0]);
        if (neg)
            for (auto& x : prim) x = -x;
        if (seen.insert(prim).second) k.nef_generators.push_back({std::vector<Rational>(prim.begin(), prim.end())});
        return true;
    });
    if (k.nef_generators.empty()) throw GeometryError("Mori cone is not strongly convex: the fan is not projective");

    // keep the extremal wall classes
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<std::vector<Rational>> tight;
        for (const auto& n : k.nef_generators)
            if (dot(n.coords, mu[i]) == 0) tight.push_back(n.coords);
        size_t rk = tight.empty() ? 0 : rank(RationalMatrix::from_rows(tight));
        if (rk == r - 1) k.generators.push_back(gens[i]);
    }
    for (size_t c = 0; c < v.fan().max_cones().size(); ++c)
        if (v.multiplicity(c) != 1) {
            k.warnings.push_back("fan is not smooth: wall classes are taken to generate the Mori cone");
            break;
        }
    return k;
}

DivisorClass default_polarization(const ToricVariety& v, const MoriCone& k) {
    const size_t r = v.pic_rank();
    if (k.generators.size() == r) {
        RationalMatrix m(r, r);
        for (size_t i = 0; i < r; ++i) {
            auto mu = v.curve_coords(k.generators[i]);
            for (size_t j = 0; j < r; ++j) m(i, j) = mu[j];
        }
        if (auto h = solve(m, std::vector<Rational>(r, Rational(1)))) return {*h};
    }
    DivisorClass h{std::vector<Rational>(r, Rational(0))};
    for (const auto& n : k.nef_generators)
        for (size_t j = 0; j < r; ++j) h.coords[j] += n.coords[j];
    return h;
}

std::vector<CurveClass> enumerate_mori_points(const ToricVariety& v, const MoriCone& k, const DivisorClass& H,
                                              long bound) {
    const size_t r = v.pic_rank();
    for (const auto& g : k.generators)
        if (v.pairing(H, g) <= 0) throw InputError("polarization is not positive on the Mori cone");
    if (bound < 0) return {};
    InequalitySystem base;
    for (const auto& n : k.nef_generators) base.push_back({n.coords, 0});
    std::vector<Rational> negH;
    for (const auto& x : H.coords) negH.push_back(-x);
    base.push_back({negH, -bound});

    std::vector<CurveClass> out;
    std::vector<Rational> mu(r, Rational(0));
    const auto& L = v.relation_basis();
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == r) {
            CurveClass c{std::vector<Integer>(v.n_rays(), Integer(0))};
            for (size_t i = 0; i < v.n_rays(); ++i)
                for (size_t j = 0; j < r; ++j) c.b[i] += mu[j].get_num() * L(j, i);
            out.push_back(std::move(c));
            return;
        }
        InequalitySystem s = base;
        for (size_t j = r; j-- > pos + 1;) {
            s = fm_eliminate(s, j);
            if (!fm_prune(s)) return;
        }
        for (const auto& c : s)
            if (c.a[pos] == 0 && dot(c.a, mu) < c.b) return;  // earlier choices already infeasible
        auto [lo, hi] = fm_bounds(s, pos, mu);
        if (!lo || !hi) throw InputError("Mori point enumeration is unbounded");
        for (Integer x = ceil_of(*lo); x <= floor_of(*hi); ++x) {
            mu[pos] = Rational(x);
            rec(pos + 1);
        }
        mu[pos] = 0;
    };
    rec(0);
    std::vector<std::pair<Rational, CurveClass>> keyed;
    for (auto& c : out) keyed.emplace_back(v.pairing(H, c), std::move(c));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second.b < b.second.b;
    });
    out.clear();
    for (auto& [deg, c] : keyed) out.push_back(std::move(c));
    return out;
}

}  // namespace trmc
