#pragma once

#include <map>
#include <vector>

#include "trmc/algebra/unipoly.hpp"
#include "trmc/polytope/polytope.hpp"

namespace trmc {

// f(t) = 1 - sum a_i t^{v_i} with support in a reflexive polytope.
struct ResidueInput {
    LatticePolytope polytope;
    std::vector<LatticePoint> support;  // v_1..v_n, nonzero
    std::vector<Rational> coefficients;  // a_1..a_n
};

// Element of the degree-k piece of S_Delta, keyed by the exponent of t
// (the t_0^k factor is implicit).
using GradedElement = std::map<LatticePoint, Rational>;

// Precomputed graded bases for repeated evaluation on a fixed (Delta, support).
class ResidueEvaluator {
public:
    ResidueEvaluator(LatticePolytope polytope, std::vector<LatticePoint> support);

    size_t dim() const { return d_; }
    size_t n() const { return support_.size(); }
    const LatticePolytope& polytope() const { return delta_; }
    const std::vector<LatticePoint>& support() const { return support_; }
    const std::vector<LatticePoint>& top_basis() const { return top_; }  // lattice points of d*Delta
    const Integer& volume() const { return volume_; }

    // H'_f by expanding the (d+1)x(d+1) determinant; cross-checked against the
    // squared-volume expansion and InternalError on disagreement.
    GradedElement hessian(const std::vector<Rational>& a) const;
    GradedElement hessian_determinant(const std::vector<Rational>& a) const;
    GradedElement hessian_volume_expansion(const std::vector<Rational>& a) const;

    // t_0^d P(a_1 t^{v_1}, ..., a_n t^{v_n}) for P homogeneous of degree d.
    GradedElement embed(const std::vector<Rational>& a, const MultiPoly& p) const;
    // F_0 = t_0 f and F_i = t_0 t_i df/dt_i in degree 1.
    GradedElement generator(const std::vector<Rational>& a, size_t i) const;

    // Res_f on S^d_Delta normalized by Res_f(H'_f) = Vol(Delta).
    // DegenerateError when f is not Delta-regular.
    Rational residue(const std::vector<Rational>& a, const GradedElement& top) const;
    // (-1)^d Res_f(t_0^d P(a t^v)).
    Rational evaluate(const std::vector<Rational>& a, const MultiPoly& p) const;

private:
    void check_coefficients(const std::vector<Rational>& a) const;
    std::vector<Rational> dense(const GradedElement& e) const;

    LatticePolytope delta_;
    std::vector<LatticePoint> support_;
    size_t d_ = 0;
    std::vector<LatticePoint> top_, below_;
    std::map<LatticePoint, size_t> top_index_;
    Integer volume_;
};

GradedElement hessian(const ResidueInput& in);
Rational residue_eval(const ResidueInput& in, const MultiPoly& p);

// a_i = c_i u^{phi(v_i)}.
struct CurveSpec {
    std::vector<Rational> direction;
    std::vector<long> exponents;
};

struct CurveResult {
    UniRationalFunction function;
    ReconstructionLog log;
};

// Reconstructs u -> R_P(c u^phi) from samples at u = 1/q, q prime > 10,
// skipping Delta-degenerate samples. ReconstructionError on a pole at u = 0.
CurveResult residue_curve(const ResidueEvaluator& ev, const CurveSpec& spec, const MultiPoly& p,
                          long sample_budget = 400);

// (x_1 + ... + x_n) Q
MultiPoly yukawa_polynomial(const MultiPoly& q);

}  // namespace trmc
