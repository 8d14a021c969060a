#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hopftwist/report.hpp"
#include "hopftwist/tensor.hpp"

namespace hopftwist {

/// Invertible normalized 2-tensor F on U(g)[[hbar]]. `host` is the twist
/// already applied to the coproduct of the algebra F lives on (1 (x) 1 for
/// the undeformed U(g)), so that compositions can be checked.
class Twist {
public:
    Twist(std::string label, TensorElement f);
    Twist(std::string label, TensorElement f, TensorElement host);

    const std::string& label() const { return label_; }
    const LiePtr& algebra() const { return f_.algebra(); }
    const TensorElement& f() const { return f_; }
    const TensorElement& finv() const { return finv_; }
    const TensorElement& host() const { return host_; }
    const TensorElement& host_inv() const { return host_inv_; }
    bool on_twisted_host() const;

    /// F * host: the twist relative to the undeformed U(g).
    const TensorElement& total() const { return total_; }
    const TensorElement& total_inv() const { return total_inv_; }
    /// beta = F_1 S(F_2) and its inverse S(F^-1_1) F^-1_2, for the total twist.
    const PBWElement& beta() const { return beta_; }
    const PBWElement& beta_inv() const { return beta_inv_; }

private:
    std::string label_;
    TensorElement f_, finv_, host_, host_inv_, total_, total_inv_;
    PBWElement beta_, beta_inv_;
};

Twist make_trivial_twist(const LiePtr& alg);
/// exp(scale * hbar * sum x_i (x) y_i); every listed element must commute
/// with every other one.
Twist make_abelian_twist(const LiePtr& alg, const std::vector<std::pair<PBWElement, PBWElement>>& r,
                         const Scalar& scale);
/// exp(H/2 (x) log(1 + scale * hbar * E)); requires [H,E] = 2E.
Twist make_jordanian_twist(const LiePtr& alg, const std::string& h, const std::string& e, const Scalar& scale);

/// Coproduct of the host algebra (Delta conjugated by the host twist).
TensorElement host_coproduct(const Twist& f, const PBWElement& x);
/// Host coproduct applied to one leg of a tensor.
TensorElement host_coproduct_on_leg(const Twist& f, const TensorElement& t, unsigned leg);

/// Residuals (F (x) 1)(Delta (x) id)F - (1 (x) F)(id (x) Delta)F for an arbitrary 2-tensor
/// with respect to the given host coproduct twist.
TensorElement cocycle_residual(const TensorElement& f, const Twist& host);
TensorElement cocycle_residual(const TensorElement& f);

/// Normalization, invertibility and 2-cocycle residuals.
Report verify_twist(const Twist& f);
/// Same checks for a raw candidate tensor on the undeformed host.
Report verify_twist_candidate(const TensorElement& f, const std::string& label);

/// F Delta(x) F^-1.
TensorElement twisted_coproduct(const Twist& f, const PBWElement& x);
/// (Delta_F (x) id) and (id (x) Delta_F) on a 2-tensor.
TensorElement twisted_coproduct_on_leg(const Twist& f, const TensorElement& t, unsigned leg);
/// beta S(x) beta^-1.
PBWElement twisted_antipode(const Twist& f, const PBWElement& x);

struct RMatrix {
    TensorElement r, rinv;
};
/// F_21 F^-1 (the undeformed R-matrix is 1 (x) 1).
RMatrix r_matrix(const Twist& f);
/// Quasi-cocommutativity on the basis, both hexagons, QYBE, triangularity.
Report verify_rmatrix(const Twist& f);
Report verify_rmatrix(const Twist& f, const RMatrix& r);

/// Legwise * of F against F^-1 and S(beta) beta^* = 1.
Report check_unitary(const Twist& f);

/// Element sum r^{ij} e_i (x) e_j of g (x) g.
class ClassicalR {
public:
    ClassicalR() = default;
    explicit ClassicalR(LiePtr alg);
    /// a (x) b - b (x) a.
    static ClassicalR wedge(const LiePtr& alg, const std::string& a, const std::string& b, const Scalar& c = Scalar(1));

    const LiePtr& algebra() const { return alg_; }
    int dim() const { return alg_->dim(); }
    const Scalar& at(int i, int j) const { return m_[static_cast<std::size_t>(i * dim() + j)]; }
    Scalar& at(int i, int j) { return m_[static_cast<std::size_t>(i * dim() + j)]; }

    ClassicalR flipped() const;
    ClassicalR operator-(const ClassicalR& o) const;
    ClassicalR operator+(const ClassicalR& o) const;
    ClassicalR operator*(const Scalar& c) const;
    friend bool operator==(const ClassicalR& a, const ClassicalR& b) { return a.m_ == b.m_; }
    bool is_zero() const;
    bool is_skew() const;

    TensorElement as_tensor() const;
    /// Wedge form sum_{i<j} r^{ij} e_i ^ e_j (skew part only).
    std::string to_wedge_string() const;
    std::string to_string() const { return as_tensor().to_string(); }

private:
    LiePtr alg_;
    std::vector<Scalar> m_;
};

/// Order-one part of a 2-tensor as an element of g (x) g; throws if the
/// legs are not of degree one.
ClassicalR first_order_part(const TensorElement& t);
/// r = r~_21 - r~ where F = 1 (x) 1 + hbar r~ + O(hbar^2).
ClassicalR classical_r(const Twist& f);
/// r = (r~ - r~_21)/2 where R = 1 (x) 1 + hbar r~ + O(hbar^2).
ClassicalR classical_r_from_rmatrix(const RMatrix& r);

/// [r12,r13] + [r12,r23] + [r13,r23] in g (x) g (x) g.
TensorElement cybe_check(const ClassicalR& r);

/// Element of the exterior algebra of g: sorted index masks to coefficients.
class LieMultivector {
public:
    explicit LieMultivector(LiePtr alg) : alg_(std::move(alg)) {}
    static LieMultivector from_r(const ClassicalR& r);
    static LieMultivector generator(const LiePtr& alg, int i);
    const LiePtr& algebra() const { return alg_; }
    const std::map<unsigned, Scalar>& terms() const { return terms_; }
    void add(unsigned mask, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    LieMultivector& operator+=(const LieMultivector& o);
    friend LieMultivector operator+(LieMultivector a, const LieMultivector& b) { return a += b; }
    friend LieMultivector operator*(const LieMultivector& a, const LieMultivector& b);  // wedge
    LieMultivector operator*(const Scalar& c) const;
    std::string to_string() const;

private:
    LiePtr alg_;
    std::map<unsigned, Scalar> terms_;
};
/// Extension of the Lie bracket to the exterior algebra of g.
LieMultivector schouten_wedge_g(const LieMultivector& a, const LieMultivector& b);
inline LieMultivector schouten_wedge_g(const ClassicalR& a, const ClassicalR& b) {
    return schouten_wedge_g(LieMultivector::from_r(a), LieMultivector::from_r(b));
}

struct LeafBasis {
    std::vector<LiePresentation::Vec> basis;
    bool bracket_closed = true;
};
/// Basis of {(alpha (x) id)(r)} and whether it is closed under the bracket.
LeafBasis symplectic_leaf(const ClassicalR& r);

std::ostream& operator<<(std::ostream& os, const ClassicalR& r);
std::ostream& operator<<(std::ostream& os, const LieMultivector& m);

/// Product twist F2 F1 where F2 lives on the algebra twisted by F1; throws
/// when F2 fails the cocycle condition for Delta_F1.
Twist compose_twists(const Twist& f2, const Twist& f1);

}  // namespace hopftwist
