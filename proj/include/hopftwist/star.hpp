#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hopftwist/geometry.hpp"
#include "hopftwist/twist.hpp"

namespace hopftwist {

/// Functions (and fields, forms) on a realization deformed by a twist:
/// a * b = (F^-1_1 |> a)(F^-1_2 |> b).
class StarAlgebra {
public:
    StarAlgebra(RealizationPtr phi, Twist f);

    const Realization& realization() const { return *phi_; }
    const RealizationPtr& realization_ptr() const { return phi_; }
    const Twist& twist() const { return f_; }
    const RMatrix& rmatrix() const { return r_; }
    int dim() const { return phi_->dim(); }

    /// Twisted L or i of X on a single basis monomial, memoized.
    const Geom& twisted_on_basis(int op, const std::string& xkey, const Geom& x, const GMono& b) const;

private:
    struct Cache;
    RealizationPtr phi_;
    Twist f_;
    RMatrix r_;
    std::shared_ptr<Cache> cache_;
};

Geom star(const StarAlgebra& a, const Geom& f, const Geom& g);
/// R^-1_1 |> a (x) R^-1_2 |> b, combined by `op`; the braiding of the
/// commutativity law g * f = (R^-1_1 |> f) * (R^-1_2 |> g).
Geom braid(const StarAlgebra& a, const Geom& f, const Geom& g,
           const std::function<Geom(const Geom&, const Geom&)>& op);

/// Skew constant bivector pi^{ij} del_i ^ del_j on R^D.
class ConstantPoisson {
public:
    explicit ConstantPoisson(int dim);
    /// Sets pi^{ij} = c and pi^{ji} = -c.
    ConstantPoisson& set(int i, int j, const Scalar& c);
    int dim() const { return dim_; }
    const Scalar& at(int i, int j) const { return m_[static_cast<std::size_t>(i * dim_ + j)]; }

private:
    int dim_;
    std::vector<Scalar> m_;
};

/// mu o exp(sign * hbar * pi^{ij} del_i (x) del_j)(f (x) g), truncated.
Geom moyal_star(const ConstantPoisson& pi, const Geom& f, const Geom& g, int sign = 1);
/// The abelian twist exp(-sign * hbar * pi^{ij} P_i (x) P_j) on the translations,
/// whose star product is moyal_star with the same sign.
StarAlgebra moyal_star_algebra(const ConstantPoisson& pi, int sign = 1);

/// rho^-1(rho(p) rho(q)) with rho the hbar-scaled symmetrization.
DualPoly gutt_star(const DualPoly& p, const DualPoly& q);

/// {f,g} = sum r^{ij} (e_i |> f)(e_j |> g).
Geom poisson_from_r(const Realization& phi, const ClassicalR& r, const Geom& f, const Geom& g);

Geom twisted_wedge(const StarAlgebra& a, const Geom& x, const Geom& y);
Geom twisted_schouten(const StarAlgebra& a, const Geom& x, const Geom& y);

enum class CartanOp { Lie, Insertion, Differential };

/// L^F_X w = L_{F^-1_1 |> X}(F^-1_2 |> w), likewise for i; d is undeformed.
Geom twisted_cartan(const StarAlgebra& a, CartanOp op, const Geom& x, const Geom& w);

/// One member of the operator families L_X, i_X, d.
struct CartanTerm {
    CartanOp op;
    Geom x;
    /// Degree as a map on forms: 1-k, -k or 1.
    int degree() const;
};

/// [A, B]_R w = A(B w) - (-1)^{|A||B|} B_{R^-1_1 |> y}(A_{R^-1_2 |> x} w) with
/// the twisted operators; `rinv` overrides the braiding.
Geom braided_commutator(const StarAlgebra& a, const CartanTerm& A, const CartanTerm& B, const Geom& w,
                        const TensorElement* rinv = nullptr);

struct CartanSamples {
    std::vector<Geom> multivectors;
    std::vector<Geom> forms;
};

/// Coordinate fields, realized generators, their wedges up to degree 2 and
/// coordinate forms up to degree 2 with linear coefficients.
CartanSamples default_cartan_samples(const Realization& phi);

/// The six relations of the braided Cartan calculus on every pair of
/// sample multivectors and every sample form.
Report cartan_report(const StarAlgebra& a, const CartanSamples& samples,
                     const std::optional<TensorElement>& rinv_override = std::nullopt);

/// S(beta) |> a^*; throws AlgebraError when the twist is not unitary.
Geom twisted_involution(const StarAlgebra& a, const Geom& obj);

}  // namespace hopftwist
