#pragma once

#include <vector>

#include "trmc/algebra/matrix.hpp"
#include "trmc/polytope/triangulation.hpp"

namespace trmc {

using Cone = std::vector<size_t>;  // sorted ray indices

class Fan {
public:
    // Checks ray independence in each max cone and that every codimension-one
    // face of a max cone lies in exactly two max cones.
    static Fan make(size_t lattice_rank, std::vector<LatticePoint> rays, std::vector<Cone> max_cones);

    size_t lattice_rank() const { return d_; }
    size_t n_rays() const { return rays_.size(); }
    const std::vector<LatticePoint>& rays() const { return rays_; }
    const std::vector<Cone>& max_cones() const { return cones_; }

    bool is_face(const Cone& sorted) const;  // contained in some max cone
    IntegerMatrix ray_matrix() const;        // n x d
    Integer multiplicity(const Cone& c) const;  // |det| of a max cone's rays

    // A (d-1)-face with its two max cones and their opposite rays.
    struct Wall {
        Cone face;
        size_t left, right;
        size_t left_apex, right_apex;
    };
    std::vector<Wall> walls() const;

    // For fans built from a triangulation: the point of A each ray came from.
    std::vector<size_t> source_points;

private:
    size_t d_ = 0;
    std::vector<LatticePoint> rays_;
    std::vector<Cone> cones_;
};

// Rays are the nonzero points used by a star triangulation, in A order.
Fan fan_from_triangulation(const Triangulation& t);

// Z-basis of ker(Z^n -> N) as rows (Hermite normal form of the Smith-form basis).
IntegerMatrix relation_lattice(const Fan& f);

}  // namespace trmc
