#include "trmc/toric/variety.hpp"

#include <algorithm>
#include <set>

#include "trmc/errors.hpp"

namespace trmc {

namespace {

void monomials_rec(size_t r, long k, size_t pos, Exponent& cur, std::vector<Exponent>& out) {
    if (pos + 1 == r) {
        cur[pos] = static_cast<int>(k);
        out.push_back(cur);
        return;
    }
    for (long a = k; a >= 0; --a) {
        cur[pos] = static_cast<int>(a);
        monomials_rec(r, k - a, pos + 1, cur, out);
    }
}

std::vector<Exponent> monomials_of_degree(size_t r, long k) {
    std::vector<Exponent> out;
    if (r == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    Exponent cur(r, 0);
    monomials_rec(r, k, 0, cur, out);
    return out;
}

Integer monomial_count(size_t r, long k) {
    if (r == 0) return k == 0 ? 1 : 0;
    return binomial(Integer(k + static_cast<long>(r) - 1), static_cast<long>(r) - 1);
}

}  // namespace

struct ToricVariety::Functional {
    std::map<Exponent, size_t> index;
    RowSpace span{0};
    size_t free_col = 0;
    Rational scale;

    std::vector<Rational> dense(const MultiPoly& q) const {
        std::vector<Rational> v(index.size(), Rational(0));
        for (const auto& [e, c] : q.terms()) v[index.at(e)] += c;
        return v;
    }
    Rational raw(const MultiPoly& q) const { return span.reduce(dense(q))[free_col]; }
};

ToricVariety::ToricVariety(Fan fan, std::optional<std::vector<Cone>> nonfaces, size_t monomial_cap)
    : fan_(std::move(fan)), monomial_cap_(monomial_cap) {
    relations_ = relation_lattice(fan_);
    if (nonfaces) {
        nonfaces_ = std::move(*nonfaces);
        for (auto& c : nonfaces_) std::sort(c.begin(), c.end());
    } else {
        nonfaces_ = minimal_nonfaces(fan_);
    }
    pic_vars_ = indexed_vars("J", pic_rank());
}

RationalMatrix ToricVariety::class_matrix() const { return to_rational(relations_.transpose()); }

Integer ToricVariety::multiplicity(size_t cone) const {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = multiplicities_.find(cone);
    if (it != multiplicities_.end()) return it->second;
    Integer m = fan_.multiplicity(fan_.max_cones().at(cone));
    multiplicities_[cone] = m;
    return m;
}

DivisorClass ToricVariety::divisor_class(size_t ray) const {
    DivisorClass c;
    for (size_t k = 0; k < pic_rank(); ++k) c.coords.push_back(Rational(relations_(k, ray)));
    return c;
}

DivisorClass ToricVariety::class_of(const std::vector<Rational>& divisor) const {
    if (divisor.size() != n_rays()) throw InputError("divisor has wrong number of coefficients");
    DivisorClass c{std::vector<Rational>(pic_rank(), Rational(0))};
    for (size_t k = 0; k < pic_rank(); ++k)
        for (size_t i = 0; i < n_rays(); ++i) c.coords[k] += divisor[i] * relations_(k, i);
    return c;
}

bool ToricVariety::is_curve_class(const std::vector<Integer>& b) const {
    if (b.size() != n_rays()) return false;
    for (size_t j = 0; j < dim(); ++j) {
        Integer s = 0;
        for (size_t i = 0; i < n_rays(); ++i) s += b[i] * fan_.rays()[i][j];
        if (s != 0) return false;
    }
    return true;
}

std::vector<Rational> ToricVariety::curve_coords(const CurveClass& beta) const {
    if (!is_curve_class(beta.b)) throw InputError("vector is not a linear relation among the rays");
    auto mu = solve(to_rational(relations_.transpose()), std::vector<Rational>(beta.b.begin(), beta.b.end()));
    if (!mu) throw InternalError("relation not in the span of the relation basis");
    return *mu;
}

Rational ToricVariety::pairing(const DivisorClass& H, const CurveClass& beta) const {
    if (H.coords.size() != pic_rank()) throw InputError("divisor class has wrong length");
    auto mu = curve_coords(beta);
    Rational s = 0;
    for (size_t k = 0; k < mu.size(); ++k) s += H.coords[k] * mu[k];
    return s;
}

std::vector<Rational> ToricVariety::divisor_lift(const DivisorClass& H) const {
    auto c = solve(to_rational(relations_), H.coords);
    if (!c) throw InternalError("divisor class has no lift");
    return *c;
}

MultiPoly ToricVariety::linear_form(size_t ray) const { return linear_form(divisor_class(ray)); }

MultiPoly ToricVariety::linear_form(const DivisorClass& c) const {
    MultiPoly p(pic_vars_);
    for (size_t k = 0; k < pic_rank(); ++k) {
        Exponent e(pic_rank(), 0);
        e[k] = 1;
        p.add_term(e, c.coords.at(k));
    }
    return p;
}

const ToricVariety::Functional& ToricVariety::functional() const {
    {
        std::lock_guard<std::mutex> lock(*mutex_);
        if (functional_) return *functional_;
    }
    const size_t r = pic_rank();
    const long d = static_cast<long>(dim());
    if (monomial_count(r, d) > Integer(static_cast<long>(monomial_cap_)))
        throw CapacityError("degree-" + std::to_string(d) + " monomial space in " + std::to_string(r) +
                            " variables exceeds the cap of " + std::to_string(monomial_cap_));
    auto f = std::make_shared<Functional>();
    auto mons = monomials_of_degree(r, d);
    for (size_t i = 0; i < mons.size(); ++i) f->index[mons[i]] = i;
    const size_t N = mons.size();
    f->span = RowSpace(N);

    for (const auto& nf : nonfaces_) {
        if (f->span.rank() + 1 >= N) break;  // kernel already one-dimensional
        if (static_cast<long>(nf.size()) > d) continue;
        MultiPoly s = MultiPoly::constant(pic_vars_, 1);
        for (size_t j : nf) s = s * linear_form(j);
        if (s.is_zero()) continue;
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : s.terms()) coeffs.push_back(c);
        Integer l = lcm_of_denominators(coeffs);
        for (const auto& m : monomials_of_degree(r, d - static_cast<long>(nf.size()))) {
            RowSpace::Sparse row;
            for (const auto& [e, c] : s.terms()) {
                Exponent t = e;
                for (size_t k = 0; k < r; ++k) t[k] += m[k];
                row.emplace_back(f->index.at(t), Rational(c * l).get_num());
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            f->span.insert_sparse(std::move(row));
            if (f->span.rank() + 1 >= N) break;
        }
    }
    auto free = f->span.non_pivot_columns();
    if (free.size() != 1)
        throw DegenerateError("top-degree quotient has dimension " + std::to_string(free.size()) + ", expected 1");
    f->free_col = free[0];

    std::vector<size_t> order(fan_.max_cones().size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return fan_.max_cones()[a] < fan_.max_cones()[b]; });
    bool normalized = false;
    for (size_t c : order) {
        MultiPoly s = MultiPoly::constant(pic_vars_, 1);
        for (size_t j : fan_.max_cones()[c]) s = s * linear_form(j);
        Rational v = f->raw(s);
        if (v == 0) continue;
        f->scale = 1 / (Rational(multiplicity(c)) * v);
        normalized = true;
        break;
    }
    if (!normalized) throw DegenerateError("no max cone has a nonzero top-degree product");

    std::lock_guard<std::mutex> lock(*mutex_);
    if (!functional_) functional_ = f;
    return *functional_;
}

Rational ToricVariety::integrate_pic(const MultiPoly& q) const {
    if (!same_vars(q.vars(), pic_vars_)) throw InputError("polynomial is not in the Pic basis variables");
    if (q.is_zero()) return 0;
    if (!q.is_homogeneous(static_cast<long>(dim())))
        throw InputError("integrand must be homogeneous of degree " + std::to_string(dim()));
    const auto& f = functional();
    return f.scale * f.raw(q);
}

Rational ToricVariety::intersection_number(const std::vector<DivisorClass>& classes) const {
    if (classes.size() != dim())
        throw InputError("need " + std::to_string(dim()) + " divisor classes, got " + std::to_string(classes.size()));
    MultiPoly s = MultiPoly::constant(pic_vars_, 1);
    for (const auto& c : classes) s = s * linear_form(c);
    return integrate_pic(s);
}

Rational ToricVariety::integrate_polynomial(const MultiPoly& p) const {
    if (p.nvars() != n_rays()) throw InputError("integrand needs one variable per ray");
    if (p.is_zero()) return 0;
    if (!p.is_homogeneous(static_cast<long>(dim())))
        throw InputError("integrand must be homogeneous of degree " + std::to_string(dim()));
    std::vector<MultiPoly> images;
    for (size_t i = 0; i < n_rays(); ++i) images.push_back(linear_form(i));
    return integrate_pic(p.substitute(images, pic_vars_));
}

std::vector<Cone> minimal_nonfaces(const Fan& f, size_t cap) {
    std::vector<Cone> out;
    std::vector<Cone> level;
    for (size_t i = 0; i < f.n_rays(); ++i) {
        if (f.is_face({i})) level.push_back({i});
        else out.push_back({i});
    }
    while (!level.empty()) {
        std::set<Cone> faces(level.begin(), level.end());
        std::vector<Cone> next;
        size_t candidates = 0;
        for (size_t a = 0; a < level.size(); ++a)
            for (size_t b = a + 1; b < level.size(); ++b) {
                if (!std::equal(level[a].begin(), level[a].end() - 1, level[b].begin())) break;
                Cone c = level[a];
                c.push_back(level[b].back());
                bool all_faces = true;
                for (size_t k = 0; k + 1 < c.size() && all_faces; ++k) {
                    Cone sub = c;
                    sub.erase(sub.begin() + k);
                    all_faces = faces.count(sub) > 0;
                }
                if (!all_faces) continue;
                if (++candidates > cap)
                    throw CapacityError("more than " + std::to_string(cap) + " candidate subsets in one search level");
                if (f.is_face(c)) next.push_back(c);
                else out.push_back(c);
            }
        level = std::move(next);
    }
    return out;
}

MultiPoly stringy_polynomial(const ToricVariety& v, const Vars& divisor_vars) {
    if (divisor_vars->size() != v.n_rays()) throw InputError("need one variable per ray");
    MultiPoly p(divisor_vars);
    for (size_t c = 0; c < v.fan().max_cones().size(); ++c) {
        Exponent e(v.n_rays(), 0);
        for (size_t j : v.fan().max_cones()[c]) e[j] = 1;
        Integer m = v.multiplicity(c);
        p.add_term(e, Rational(m * m));
    }
    return p;
}

}  // namespace trmc
