#pragma once

#include <iosfwd>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopftwist/lincomb.hpp"

namespace hopftwist {

inline constexpr std::size_t kMaxLieDim = 8;

/// PBW exponent vector e_1^{k_1} ... e_n^{k_n}.
using Exps = std::array<std::uint8_t, kMaxLieDim>;
/// hbar-free combination of PBW monomials.
using MonoPoly = std::map<Exps, Scalar>;

unsigned total_degree(const Exps& e);
Exps unit_exps(int i);

/// Finite-dimensional Lie algebra given by structure constants in a fixed
/// ordered basis, with an optional *-structure e_i^* = eps_i e_i.
class LiePresentation {
public:
    using Vec = std::vector<std::pair<int, Scalar>>;
    struct Bracket {
        int i;
        int j;
        Vec value;
    };

    /// Validates antisymmetry, Jacobi and (if given) the involution table.
    static std::shared_ptr<const LiePresentation> create(std::string name, std::vector<std::string> basis,
                                                         const std::vector<Bracket>& brackets,
                                                         std::vector<int> involution = {});
    /// so(2,1) in the basis H, E, Ep with [H,E]=2E, [H,Ep]=-2Ep, [Ep,E]=H.
    static std::shared_ptr<const LiePresentation> so21();
    /// sl(2) in the basis H, E, F with [H,E]=2E, [H,F]=-2F, [E,F]=H.
    static std::shared_ptr<const LiePresentation> sl2();
    /// Abelian Lie algebra with basis P1..Pn.
    static std::shared_ptr<const LiePresentation> abelian(int n);
    /// Looks up a built-in presentation by name (so21, sl2, abelian2).
    static std::shared_ptr<const LiePresentation> builtin(const std::string& name);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::string& basis_name(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(const std::string& symbol) const;

    /// [e_i, e_j] as a sparse vector.
    const Vec& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i * dim() + j)]; }
    Vec bracket(const Vec& x, const Vec& y) const;

    bool has_involution() const { return !involution_.empty(); }
    int involution_sign(int i) const { return involution_.at(static_cast<std::size_t>(i)); }

    /// e_j * m in normal form (memoized).
    const MonoPoly& left_multiply(int j, const Exps& m) const;
    /// a * b in normal form (memoized).
    const MonoPoly& multiply(const Exps& a, const Exps& b) const;
    /// Normal form of a word of basis indices.
    MonoPoly normalize_word(const std::vector<int>& word) const;

    enum class Strategy { Leftmost, Rightmost };
    /// Independent normalizer by repeatedly rewriting one inversion
    /// e_j e_i -> e_i e_j + [e_j,e_i] (j>i); used as a confluence oracle.
    MonoPoly rewrite_word(const std::vector<int>& word, Strategy strategy) const;

    /// S(e^k) = (-1)^{|k|} e_n^{k_n}...e_1^{k_1} normalized (memoized).
    const MonoPoly& antipode(const Exps& m) const;
    /// (e^k)^* = prod eps_i^{k_i} e_n^{k_n}...e_1^{k_1} normalized (coefficients conjugated by callers).
    const MonoPoly& involution(const Exps& m) const;

    std::string render(const Exps& m) const;

private:
    LiePresentation() = default;
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<Vec> table_;
    std::vector<int> involution_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Exps>, MonoPoly> left_cache_;
    mutable std::map<std::pair<Exps, Exps>, MonoPoly> mul_cache_;
    mutable std::map<Exps, MonoPoly> antipode_cache_;
    mutable std::map<Exps, MonoPoly> involution_cache_;
};

using LiePtr = std::shared_ptr<const LiePresentation>;

/// Element of U(g)[[hbar]] in PBW normal form.
class PBWElement : public LinComb<Exps> {
public:
    PBWElement() = default;
    explicit PBWElement(LiePtr alg) : alg_(std::move(alg)) {}
    static PBWElement one(const LiePtr& alg) { return constant(alg, Scalar(1)); }
    static PBWElement constant(const LiePtr& alg, const Scalar& c);
    static PBWElement generator(const LiePtr& alg, int i);
    static PBWElement generator(const LiePtr& alg, const std::string& symbol);
    static PBWElement monomial(const LiePtr& alg, const Exps& m, const Scalar& c = Scalar(1), unsigned h = 0);
    /// Normal form of c * w_1 w_2 ... w_k.
    static PBWElement word(const LiePtr& alg, const std::vector<int>& letters, const Scalar& c = Scalar(1));
    static PBWElement word(const LiePtr& alg, const std::vector<std::string>& letters, const Scalar& c = Scalar(1));

    const LiePtr& algebra() const { return alg_; }

    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
    friend PBWElement operator*(PBWElement a, const Scalar& c);
    friend PBWElement operator*(const Scalar& c, PBWElement a) { return std::move(a) * c; }
    PBWElement operator-() const { return *this * Scalar(-1); }
    /// Multiplies by hbar^k.
    PBWElement hbar_shift(unsigned k) const;

    /// Series inverse of an element with invertible scalar constant term.
    PBWElement inverse() const;
    PBWElement pow(unsigned k) const;

    std::string to_string() const;

private:
    void adopt(const PBWElement& o);
    LiePtr alg_;
};

PBWElement antipode(const PBWElement& x);
HbarSeries counit(const PBWElement& x);
/// Anti-linear anti-automorphism induced by the involution table.
PBWElement star(const PBWElement& x);
/// e^{u} for u without constant term (finite by truncation).
PBWElement exp_series(const PBWElement& u);
/// log(1+u) for u without constant term.
PBWElement log1p_series(const PBWElement& u);

/// Commutative polynomial on g^* (variables named after the basis).
class DualPoly : public LinComb<Exps> {
public:
    DualPoly() = default;
    explicit DualPoly(LiePtr alg) : alg_(std::move(alg)) {}
    static DualPoly variable(const LiePtr& alg, int i);
    static DualPoly constant(const LiePtr& alg, const Scalar& c);
    static DualPoly monomial(const LiePtr& alg, const Exps& m, const Scalar& c = Scalar(1), unsigned h = 0);
    const LiePtr& algebra() const { return alg_; }

    DualPoly& operator+=(const DualPoly& o);
    DualPoly& operator-=(const DualPoly& o);
    friend DualPoly operator+(DualPoly a, const DualPoly& b) { return a += b; }
    friend DualPoly operator-(DualPoly a, const DualPoly& b) { return a -= b; }
    friend DualPoly operator*(const DualPoly& a, const DualPoly& b);
    friend DualPoly operator*(DualPoly a, const Scalar& c);
    DualPoly hbar_shift(unsigned k) const;
    unsigned degree() const;
    std::string to_string() const;

private:
    LiePtr alg_;
};

/// Degree bound for symmetrize/unsymmetrize (default 4).
unsigned symmetrize_degree_bound();
void set_symmetrize_degree_bound(unsigned d);

/// rho_hbar: x^k -> hbar^n/n! sum over orderings of the word.
PBWElement symmetrize(const DualPoly& p);
/// Inverse of symmetrize on its image (triangular solve by degree).
DualPoly unsymmetrize(const PBWElement& x);
/// Unscaled variants (no hbar^n prefactor), used by the Gutt product.
PBWElement symmetrize_unscaled(const DualPoly& p);
DualPoly unsymmetrize_unscaled(const PBWElement& x);

std::ostream& operator<<(std::ostream& os, const PBWElement& x);
std::ostream& operator<<(std::ostream& os, const DualPoly& x);

}  // namespace hopftwist
