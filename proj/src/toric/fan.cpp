#include "trmc/toric/fan.hpp"

#include <algorithm>
#include <map>

#include "trmc/errors.hpp"

namespace trmc {

Fan Fan::make(size_t lattice_rank, std::vector<LatticePoint> rays, std::vector<Cone> max_cones) {
    Fan f;
    f.d_ = lattice_rank;
    for (const auto& r : rays) {
        if (r.size() != lattice_rank) throw InputError("ray of wrong length");
        if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) throw InputError("zero ray");
    }
    f.rays_ = std::move(rays);
    for (auto& c : max_cones) {
        std::sort(c.begin(), c.end());
        if (c.size() != lattice_rank) throw InputError("max cone of wrong size");
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw InputError("repeated ray in a cone");
        for (size_t i : c)
            if (i >= f.rays_.size()) throw InputError("cone references ray " + std::to_string(i));
        if (f.multiplicity(c) == 0) throw GeometryError("max cone with linearly dependent rays");
    }
    f.cones_ = std::move(max_cones);
    std::map<Cone, int> faces;
    for (const auto& c : f.cones_)
        for (size_t k = 0; k < c.size(); ++k) {
            Cone face = c;
            face.erase(face.begin() + k);
            ++faces[face];
        }
    for (const auto& [face, count] : faces)
        if (count != 2) throw GeometryError("fan is not complete: a wall lies in " + std::to_string(count) + " cones");
    return f;
}

bool Fan::is_face(const Cone& s) const {
    for (const auto& c : cones_)
        if (std::includes(c.begin(), c.end(), s.begin(), s.end())) return true;
    return false;
}

IntegerMatrix Fan::ray_matrix() const {
    IntegerMatrix m(rays_.size(), d_);
    for (size_t i = 0; i < rays_.size(); ++i)
        for (size_t j = 0; j < d_; ++j) m(i, j) = rays_[i][j];
    return m;
}

Integer Fan::multiplicity(const Cone& c) const {
    IntegerMatrix m(c.size(), d_);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < d_; ++j) m(i, j) = rays_[c[i]][j];
    return abs(determinant(m));
}

std::vector<Fan::Wall> Fan::walls() const {
    std::map<Cone, std::vector<std::pair<size_t, size_t>>> faces;
    for (size_t i = 0; i < cones_.size(); ++i)
        for (size_t k = 0; k < cones_[i].size(); ++k) {
            Cone face = cones_[i];
            face.erase(face.begin() + k);
            faces[face].push_back({i, cones_[i][k]});
        }
    std::vector<Wall> out;
    for (const auto& [face, inc] : faces)
        if (inc.size() == 2) out.push_back({face, inc[0].first, inc[1].first, inc[0].second, inc[1].second});
    return out;
}

Fan fan_from_triangulation(const Triangulation& t) {
    if (!validate_triangulation(t, true).ok()) throw GeometryError("fan needs a valid star triangulation");
    const auto& A = t.base.points();
    std::vector<size_t> used;
    for (const auto& s : t.simplices)
        for (size_t v : s.vertices)
            if (v != 0) used.push_back(v);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::map<size_t, size_t> ray_of;
    std::vector<LatticePoint> rays;
    for (size_t v : used) {
        std::vector<Integer> p(A[v].begin(), A[v].end());
        if (gcd_of(p) != 1) throw GeometryError("triangulation vertex is not a primitive lattice vector");
        ray_of[v] = rays.size();
        rays.push_back(A[v]);
    }
    std::vector<Cone> cones;
    for (const auto& s : t.simplices) {
        Cone c;
        for (size_t v : s.vertices)
            if (v != 0) c.push_back(ray_of.at(v));
        cones.push_back(c);
    }
    Fan f = Fan::make(t.base.dim(), std::move(rays), std::move(cones));
    f.source_points = used;
    return f;
}

IntegerMatrix relation_lattice(const Fan& f) {
    // rows of U past the rank annihilate the ray matrix and span its left kernel over Z
    SmithForm sf = smith_normal_form(f.ray_matrix());
    IntegerMatrix L(f.n_rays() - sf.rank(), f.n_rays());
    for (size_t k = sf.rank(); k < f.n_rays(); ++k)
        for (size_t i = 0; i < f.n_rays(); ++i) L(k - sf.rank(), i) = sf.U(k, i);
    return hermite_normal_form(L);
}

}  // namespace trmc
