#pragma once

#include <string>
#include <vector>

#include "hopftwist/report.hpp"
#include "hopftwist/tensor.hpp"

namespace hopftwist {

/// Finite-dimensional Hopf algebra given by structure tables over a basis.
class FiniteHopf {
public:
    using Vec = std::vector<Scalar>;
    /// n x n matrix, entry (i, j) = coefficient of b_i (x) b_j.
    using Mat = std::vector<Scalar>;

    FiniteHopf(std::string name, std::vector<std::string> basis);

    /// Group algebra k[Z2]: basis 1, g with g^2 = 1, Delta g = g (x) g, S g = g.
    static FiniteHopf group_algebra_z2();
    /// Functions on Z2: basis d0, d1 (delta functions).
    static FiniteHopf functions_z2();
    /// Sweedler's four-dimensional algebra: basis 1, g, x, gx.
    static FiniteHopf sweedler();

    const std::string& name() const { return name_; }
    int dim() const { return n_; }
    const std::string& basis_name(int i) const { return basis_.at(static_cast<std::size_t>(i)); }

    void set_product(int i, int j, Vec v);
    void set_unit(Vec v);
    void set_coproduct(int i, Mat m);
    void set_counit(int i, Scalar e);
    void set_antipode(int i, Vec v);
    /// Validates table shapes (every slot filled with the right size).
    void validate() const;

    Vec basis_vector(int i) const;
    Vec zero() const { return Vec(static_cast<std::size_t>(n_)); }
    const Vec& unit() const { return unit_; }

    Vec mul(const Vec& a, const Vec& b) const;
    Mat coproduct(const Vec& a) const;
    Scalar counit(const Vec& a) const;
    Vec antipode(const Vec& a) const;

    /// Tensor-square operations on n x n matrices.
    Mat mul2(const Mat& a, const Mat& b) const;
    /// (Delta (x) id) and (id (x) Delta) as n^3 arrays.
    std::vector<Scalar> coproduct_left(const Mat& t) const;
    std::vector<Scalar> coproduct_right(const Mat& t) const;

    bool is_commutative() const;
    bool is_cocommutative() const;

    std::string render(const Vec& v) const;

private:
    std::string name_;
    std::vector<std::string> basis_;
    int n_;
    std::vector<Vec> product_;
    Vec unit_;
    std::vector<Mat> coproduct_;
    Vec counit_;
    std::vector<Vec> antipode_;
};

/// Hopf axioms on all PBW monomials of degree <= degree_bound.
Report hopf_axiom_report(const LiePtr& alg, unsigned degree_bound);
/// Hopf axioms on the basis of a finite Hopf algebra.
Report hopf_axiom_report(const FiniteHopf& h);

/// All exponent vectors of total degree <= bound for the algebra.
std::vector<Exps> monomials_up_to(const LiePresentation& alg, unsigned bound);

}  // namespace hopftwist
