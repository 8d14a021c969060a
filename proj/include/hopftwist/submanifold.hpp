#pragma once

#include <vector>

#include "hopftwist/connection.hpp"

namespace hopftwist {

/// Graded lexicographic order on coordinate monomials with x1 > x2 > ... .
bool grlex_less(const GMono& a, const GMono& b);

/// Principal ideal (F) of the polynomial functions, reduced by division with
/// respect to the graded lexicographic order. The tangent frame is declared
/// data: fields assumed to generate the tangent vector fields modulo the
/// fields with coefficients in the ideal.
class QuadricIdeal {
public:
    /// Throws std::invalid_argument unless F is a non-constant hbar-free function.
    explicit QuadricIdeal(Geom generator, std::vector<Geom> tangent_frame = {});
    /// (1/2) x1 x3 + (a/2) x2^2 + c with the realized fields of `phi` as frame.
    static QuadricIdeal hyperboloid(const Scalar& a, const Scalar& c, const Realization& phi);

    const Geom& generator() const { return f_; }
    int dim() const { return f_.dim(); }
    const GMono& leading_monomial() const { return lm_; }
    const Scalar& leading_coefficient() const { return lc_; }
    const std::vector<Geom>& tangent_frame() const { return frame_; }

private:
    Geom f_;
    GMono lm_;
    Scalar lc_;
    std::vector<Geom> frame_;
};

/// Remainder of every coefficient (per hbar order and basis wedge) under
/// division by the generator.
Geom reduce_mod(const QuadricIdeal& ideal, const Geom& p);
/// [[P, F]] lies in the ideal; functions are always tangent.
bool is_tangent(const QuadricIdeal& ideal, const Geom& p);
/// Canonical representative: coefficient-wise reduction. Multivectors must be
/// tangent (std::invalid_argument otherwise).
Geom project(const QuadricIdeal& ideal, const Geom& obj);
/// True when obj projects to zero. Functions and multivectors reduce to 0;
/// a k-form vanishes when every insertion of k frame fields reduces to 0
/// (coefficient-wise without a declared frame).
bool projects_to_zero(const QuadricIdeal& ideal, const Geom& obj);

struct ProjectionSamples {
    std::vector<Geom> functions;
    std::vector<Geom> multivectors;
    std::vector<Geom> forms;
};

/// Random polynomial data of coefficient degree <= max_degree: `count`
/// functions, and count/5 tangent multivectors (built on the frame) and forms.
ProjectionSamples random_projection_samples(const QuadricIdeal& ideal, int count, unsigned seed, int max_degree = 3);

/// pr commutes with the star product, twisted wedge and Schouten bracket,
/// twisted Lie derivative and insertion and d, on consecutive sample pairs.
/// Throws std::invalid_argument when a realized generator is not tangent.
Report twist_project_report(const StarAlgebra& a, const QuadricIdeal& ideal, const ProjectionSamples& samples);

/// Jordanian deformation of the hyperboloid (1/2) x1 x3 + (a/2) x2^2 + c at
/// the current truncation order: coordinate star products, twisted coproduct,
/// antipode and involution, the deformed constraint, twisted insertion and
/// Lie derivative along del_i, and nabla^F on the so(2,1) fields.
/// `a` must have an exact square root (a perfect square or a parameter).
Report hyperboloid_suite(const Scalar& a, const Scalar& c);

}  // namespace hopftwist
