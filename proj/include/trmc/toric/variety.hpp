#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "trmc/algebra/multipoly.hpp"
#include "trmc/toric/fan.hpp"

namespace trmc {

struct DivisorClass {
    std::vector<Rational> coords;  // in the Pic (x) Q basis dual to the relation basis
    bool operator==(const DivisorClass& o) const { return coords == o.coords; }
};

struct CurveClass {
    std::vector<Integer> b;  // element of R(Sigma) in Z^n
    bool operator==(const CurveClass& o) const { return b == o.b; }
    bool operator<(const CurveClass& o) const { return b < o.b; }
};

constexpr size_t kMaxNonfaceCandidatesPerLevel = 5000;
constexpr size_t kDefaultMonomialCap = 200000;

class ToricVariety {
public:
    // Minimal non-faces are found by breadth-first search unless supplied.
    explicit ToricVariety(Fan fan, std::optional<std::vector<Cone>> nonfaces = std::nullopt,
                          size_t monomial_cap = kDefaultMonomialCap);

    const Fan& fan() const { return fan_; }
    size_t dim() const { return fan_.lattice_rank(); }
    size_t n_rays() const { return fan_.n_rays(); }
    size_t pic_rank() const { return relations_.rows(); }
    const IntegerMatrix& relation_basis() const { return relations_; }  // r x n
    RationalMatrix class_matrix() const;                                // n x r
    const std::vector<Cone>& sr_nonfaces() const { return nonfaces_; }

    Integer multiplicity(size_t cone) const;

    DivisorClass divisor_class(size_t ray) const;
    DivisorClass class_of(const std::vector<Rational>& divisor) const;  // sum c_i [D_i]
    std::vector<Rational> curve_coords(const CurveClass& beta) const;   // in the relation basis
    bool is_curve_class(const std::vector<Integer>& b) const;
    Rational pairing(const DivisorClass& H, const CurveClass& beta) const;
    // A divisor sum c_i D_i with the given class.
    std::vector<Rational> divisor_lift(const DivisorClass& H) const;

    // Polynomial in the r Pic basis variables J_1..J_r.
    const Vars& pic_vars() const { return pic_vars_; }
    MultiPoly linear_form(size_t ray) const;
    MultiPoly linear_form(const DivisorClass& c) const;

    Rational intersection_number(const std::vector<DivisorClass>& classes) const;
    Rational integrate_pic(const MultiPoly& q) const;     // q homogeneous of degree dim in J
    Rational integrate_polynomial(const MultiPoly& p) const;  // p in n divisor variables, degree dim

private:
    struct Functional;
    const Functional& functional() const;

    Fan fan_;
    IntegerMatrix relations_;
    std::vector<Cone> nonfaces_;
    size_t monomial_cap_;
    Vars pic_vars_;
    std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
    mutable std::map<size_t, Integer> multiplicities_;
    mutable std::shared_ptr<const Functional> functional_;
};

std::vector<Cone> minimal_nonfaces(const Fan& f, size_t cap = kMaxNonfaceCandidatesPerLevel);

// Sum over max cones of mult^2 times the product of the cone's divisor variables.
MultiPoly stringy_polynomial(const ToricVariety& v, const Vars& divisor_vars);

}  // namespace trmc
