#pragma once

#include <iosfwd>
#include <functional>
#include <vector>

#include "hopftwist/lie.hpp"

namespace hopftwist {

inline constexpr std::size_t kMaxArity = 4;
using Legs = std::array<Exps, kMaxArity>;

/// Element of U(g)^{(x) n}[[hbar]] in leg notation; one coefficient per tuple.
class TensorElement : public LinComb<Legs> {
public:
    TensorElement() = default;
    TensorElement(LiePtr alg, unsigned arity);
    static TensorElement one(const LiePtr& alg, unsigned arity);
    /// a_1 (x) a_2 (x) ... (x) a_n.
    static TensorElement product_of(const std::vector<PBWElement>& legs);
    static TensorElement simple(const LiePtr& alg, unsigned arity, const Legs& legs, const Scalar& c = Scalar(1),
                                unsigned h = 0);

    unsigned arity() const { return arity_; }
    const LiePtr& algebra() const { return alg_; }

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(TensorElement a, const Scalar& c);
    friend TensorElement operator*(const Scalar& c, TensorElement a) { return std::move(a) * c; }
    TensorElement operator-() const { return *this * Scalar(-1); }
    TensorElement hbar_shift(unsigned k) const;

    /// Series inverse for elements of the form c (1 + O(hbar)).
    TensorElement inverse() const;

    std::string to_string() const;

private:
    void check_compatible(const TensorElement& o) const;
    LiePtr alg_;
    unsigned arity_ = 0;
};

/// Places a 2-tensor (or any tensor) into the given 1-based legs of an
/// arity-n tensor with units elsewhere; the order of `positions` realizes
/// the leg permutation, so the flip is leg_embed(t, {2,1}, 2).
TensorElement leg_embed(const TensorElement& t, const std::vector<unsigned>& positions, unsigned arity);
inline TensorElement flip(const TensorElement& t) { return leg_embed(t, {2, 1}, 2); }

TensorElement coproduct(const PBWElement& x);
/// Applies the coproduct to the 1-based leg, splicing in two legs.
TensorElement coproduct_on_leg(const TensorElement& t, unsigned leg);
/// Applies the counit to the 1-based leg (arity drops by one; arity 1 gives
/// a constant 1-tensor).
TensorElement counit_on_leg(const TensorElement& t, unsigned leg);
/// Applies a linear map on monomials to one leg.
TensorElement map_leg(const TensorElement& t, unsigned leg, const std::function<const MonoPoly&(const Exps&)>& f);
TensorElement antipode_on_leg(const TensorElement& t, unsigned leg);
/// Legwise *: conjugate coefficients and apply the involution to each leg.
TensorElement star_legwise(const TensorElement& t);
/// Multiplication map: arity-2 tensor -> element a b.
PBWElement multiply_legs(const TensorElement& t);
/// Arity-1 tensor as a PBW element.
PBWElement as_pbw(const TensorElement& t);
/// Component of the given leg-tuple monomials, for contraction loops.
PBWElement leg_element(const LiePtr& alg, const Exps& m);

std::ostream& operator<<(std::ostream& os, const TensorElement& t);

}  // namespace hopftwist
