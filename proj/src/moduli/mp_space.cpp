#include "trmc/moduli/mp_space.hpp"

#include <algorithm>
#include <map>

#include "trmc/errors.hpp"

namespace trmc {

namespace {

// m_sigma with <m, v_j> = -c_j on the rays of the cone.
std::vector<Rational> cone_character(const ToricVariety& v, const Cone& sigma, const std::vector<Rational>& c) {
    const size_t d = v.dim();
    RationalMatrix m(d, d);
    std::vector<Rational> rhs(d);
    for (size_t r = 0; r < d; ++r) {
        for (size_t j = 0; j < d; ++j) m(r, j) = v.fan().rays()[sigma[r]][j];
        rhs[r] = -c[sigma[r]];
    }
    return *solve(m, rhs);
}

Rational eval_at(const ToricVariety& v, const std::vector<Rational>& m, size_t ray) {
    Rational s = 0;
    for (size_t j = 0; j < v.dim(); ++j) s += m[j] * v.fan().rays()[ray][j];
    return s;
}

}  // namespace

bool is_ample(const ToricVariety& v, const DivisorClass& H) {
    auto c = v.divisor_lift(H);
    for (const auto& sigma : v.fan().max_cones()) {
        auto m = cone_character(v, sigma, c);
        for (size_t j = 0; j < v.n_rays(); ++j) {
            if (std::binary_search(sigma.begin(), sigma.end(), j)) continue;
            if (eval_at(v, m, j) + c[j] <= 0) return false;
        }
    }
    return true;
}

DivisorClass ample_class(const MoriCone& k) {
    if (k.nef_generators.empty()) throw InputError("Mori cone has no nef generators");
    DivisorClass h{std::vector<Rational>(k.nef_generators.front().coords.size(), Rational(0))};
    for (const auto& n : k.nef_generators)
        for (size_t j = 0; j < n.coords.size(); ++j) h.coords[j] += n.coords[j];
    return h;
}

MPPolytope build_mp_polytope(const ToricVariety& v, const DivisorClass& H, const CurveClass& beta) {
    if (!v.is_curve_class(beta.b)) throw InputError("beta is not a linear relation among the rays");
    if (!is_ample(v, H)) throw InputError("polarization is not ample");
    MPPolytope p;
    p.beta = beta;
    const size_t n = v.n_rays();
    for (size_t j = 0; j < n; ++j) (beta.b[j] < 0 ? p.negative : p.positive).push_back(j);
    if (!v.fan().is_face(p.negative)) {
        p.empty = true;
        return p;
    }
    for (size_t j : p.positive) {
        if (beta.b[j] != 0) continue;
        Cone c = p.negative;
        c.insert(std::lower_bound(c.begin(), c.end(), j), j);
        if (!v.fan().is_face(c)) p.degenerate.push_back(j);
    }
    std::map<size_t, size_t> first_copy;
    for (size_t j : p.positive) {
        first_copy[j] = p.coords.size();
        for (long i = 0; i <= beta.b[j].get_si(); ++i) p.coords.push_back({j, i});
    }
    const size_t m = p.coords.size();
    for (size_t k = 0; k < m; ++k)
        if (!std::binary_search(p.degenerate.begin(), p.degenerate.end(), p.coords[k].ray)) p.facets.push_back(k);

    const auto& L = v.relation_basis();
    IntegerMatrix C(L.rows(), m);
    for (size_t r = 0; r < L.rows(); ++r)
        for (size_t k = 0; k < m; ++k) C(r, k) = L(r, p.coords[k].ray);
    p.lattice_basis = integer_kernel(C);
    p.dim = p.lattice_basis.rows();

    auto c = v.divisor_lift(H);
    for (const auto& sigma : v.fan().max_cones()) {
        if (!std::includes(sigma.begin(), sigma.end(), p.negative.begin(), p.negative.end())) continue;
        auto ms = cone_character(v, sigma, c);
        std::vector<size_t> free;  // positive rays off sigma carry x_j on one chosen copy
        for (size_t j : p.positive)
            if (!std::binary_search(sigma.begin(), sigma.end(), j)) free.push_back(j);
        std::vector<long> choice(free.size(), 0);
        for (;;) {
            std::vector<Rational> x(m, Rational(0));
            for (size_t f = 0; f < free.size(); ++f)
                x[first_copy[free[f]] + choice[f]] = eval_at(v, ms, free[f]) + c[free[f]];
            p.vertices.push_back(std::move(x));
            size_t f = 0;
            while (f < free.size() && choice[f] == beta.b[free[f]].get_si()) choice[f++] = 0;
            if (f == free.size()) break;
            ++choice[f];
        }
    }
    return p;
}

MPSpace mp_space(const ToricVariety& v, const DivisorClass& H, const CurveClass& beta) {
    MPPolytope p = build_mp_polytope(v, H, beta);
    MPSpace s;
    s.beta = beta;
    s.negative = p.negative;
    s.degenerate = p.degenerate;
    if (p.empty) {
        s.empty = true;
        return s;
    }
    const size_t dim = p.dim;
    std::vector<LatticePoint> rays;
    std::map<size_t, size_t> ray_of_coord;
    for (size_t f : p.facets) {
        std::vector<Integer> col = p.lattice_basis.col(f);
        Integer g = gcd_of(col);
        if (g == 0) throw GeometryError("coordinate hyperplane is not a facet of the moduli polytope");
        LatticePoint r;
        for (const auto& x : col) r.push_back(Integer(x / g).get_si());
        ray_of_coord[f] = rays.size();
        rays.push_back(std::move(r));
        s.ray_index.push_back(p.coords[f]);
    }
    std::vector<Cone> cones;
    for (const auto& x : p.vertices) {
        Cone c;
        for (size_t f : p.facets)
            if (x[f] == 0) c.push_back(ray_of_coord[f]);
        if (c.size() != dim) throw GeometryError("moduli polytope is not simple at a vertex");
        cones.push_back(std::move(c));
    }

    // minimal F among non-degenerate positive rays with F + Neg spanning no cone
    std::vector<size_t> live;
    for (size_t j : p.positive)
        if (!std::binary_search(p.degenerate.begin(), p.degenerate.end(), j)) live.push_back(j);
    std::vector<std::vector<size_t>> minimal;
    for (size_t mask = 1; mask < (size_t(1) << live.size()); ++mask) {
        std::vector<size_t> F;
        for (size_t b = 0; b < live.size(); ++b)
            if (mask >> b & 1) F.push_back(live[b]);
        bool has_smaller = false;
        for (const auto& G : minimal)
            if (std::includes(F.begin(), F.end(), G.begin(), G.end())) has_smaller = true;
        if (has_smaller) continue;
        Cone u = p.negative;
        u.insert(u.end(), F.begin(), F.end());
        std::sort(u.begin(), u.end());
        if (!v.fan().is_face(u)) minimal.push_back(F);
    }
    // process subsets in order of size so minimality holds
    std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::vector<size_t>> kept;
    for (const auto& F : minimal) {
        bool dominated = false;
        for (const auto& G : kept)
            if (std::includes(F.begin(), F.end(), G.begin(), G.end())) dominated = true;
        if (!dominated) kept.push_back(F);
    }
    std::vector<Cone> nonfaces;
    for (const auto& F : kept) {
        Cone c;
        for (size_t r = 0; r < s.ray_index.size(); ++r)
            if (std::binary_search(F.begin(), F.end(), s.ray_index[r].ray)) c.push_back(r);
        nonfaces.push_back(c);
    }

    auto variety = std::make_shared<ToricVariety>(Fan::make(dim, std::move(rays), std::move(cones)), nonfaces);
    s.variety = variety;

    // lift each relation of the moduli fan to a rational relation of the base fan
    const auto& L = v.relation_basis();
    const auto& Lb = variety->relation_basis();
    const size_t r = L.rows(), rb = Lb.rows();
    s.psi = RationalMatrix(r, rb);
    std::vector<size_t> known;  // base rays whose relation coefficient is fixed
    for (size_t j : p.positive) known.push_back(j);
    for (size_t k = 0; k < rb; ++k) {
        std::vector<Rational> target(v.n_rays(), Rational(0));
        std::vector<bool> seen(v.n_rays(), false);
        for (size_t q = 0; q < s.ray_index.size(); ++q) {
            size_t j = s.ray_index[q].ray;
            if (seen[j] && target[j] != Rational(Lb(k, q))) throw InternalError("moduli relation not constant on copies");
            target[j] = Lb(k, q);
            seen[j] = true;
        }
        RationalMatrix A(known.size(), r);
        std::vector<Rational> rhs;
        for (size_t a = 0; a < known.size(); ++a) {
            for (size_t kk = 0; kk < r; ++kk) A(a, kk) = L(kk, known[a]);
            rhs.push_back(target[known[a]]);
        }
        auto alpha = solve(A, rhs);
        if (!alpha) throw InternalError("moduli relation does not lift to the base");
        for (size_t kk = 0; kk < r; ++kk) s.psi(kk, k) = (*alpha)[kk];
    }
    for (size_t j = 0; j < v.n_rays(); ++j) {
        DivisorClass c{std::vector<Rational>(rb, Rational(0))};
        for (size_t k = 0; k < rb; ++k)
            for (size_t kk = 0; kk < r; ++kk) c.coords[k] += Rational(L(kk, j)) * s.psi(kk, k);
        s.psi_divisors.push_back(std::move(c));
    }
    return s;
}

MultiPoly mp_class(const MPSpace& m) {
    if (m.empty) throw InputError("Morrison-Plesser class of an empty moduli space");
    const auto& X = *m.variety;
    Integer total = 0;
    for (const auto& b : m.beta.b) total += b;
    if (total < 0) throw InputError("anticanonical degree of beta is negative");
    MultiPoly sum(X.pic_vars());
    for (const auto& c : m.psi_divisors) sum += X.linear_form(c);
    MultiPoly phi = sum.pow(static_cast<unsigned>(total.get_ui()));
    for (size_t j : m.negative) {
        long e = -m.beta.b[j].get_si() - 1;
        if (e > 0) phi = phi * X.linear_form(m.psi_divisors[j]).pow(static_cast<unsigned>(e));
    }
    return phi;
}

Rational intersection_coefficient(const MPSpace& m, const MultiPoly& p) {
    if (m.empty) return 0;
    const auto& X = *m.variety;
    if (p.nvars() != m.psi_divisors.size()) throw InputError("integrand needs one variable per base ray");
    if (p.is_zero()) return 0;
    long d = static_cast<long>(X.dim()) - static_cast<long>(mp_class(m).max_degree());
    if (!p.is_homogeneous(d)) throw InputError("integrand must be homogeneous of the base dimension");
    std::vector<MultiPoly> images;
    for (const auto& c : m.psi_divisors) images.push_back(X.linear_form(c));
    return X.integrate_pic(p.substitute(images, X.pic_vars()) * mp_class(m));
}

}  // namespace trmc
