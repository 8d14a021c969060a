#pragma once

#include <iosfwd>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopftwist/tensor.hpp"

namespace hopftwist {

inline constexpr int kMaxCoords = 8;

/// Sign of moving the bits of b past those of a into sorted position
/// (wedge of basis elements a ^ b with disjoint masks).
int wedge_sign(unsigned a, unsigned b);

/// x^alpha times a basis wedge (del_I or dx^I, by kind).
struct GMono {
    std::array<std::uint8_t, kMaxCoords> x{};
    std::uint8_t mask = 0;
    auto operator<=>(const GMono&) const = default;
    bool operator==(const GMono&) const = default;
};

/// Function: polynomial, mask always 0. Multivector: masks select del_i.
/// Form: masks select dx^i. Degree-zero parts of multivectors and forms are
/// functions; an object with only degree-zero terms compares equal
/// regardless of kind.
enum class GeomKind : std::uint8_t { Function, Multivector, Form };

class Geom : public LinComb<GMono> {
public:
    Geom() = default;
    Geom(GeomKind kind, int dim);

    static Geom constant(int dim, const Scalar& c);
    static Geom coordinate(int dim, int i);
    static Geom partial(int dim, int i);
    static Geom dx(int dim, int i);
    static Geom monomial(GeomKind kind, int dim, const GMono& m, const Scalar& c = Scalar(1), unsigned h = 0);

    GeomKind kind() const { return kind_; }
    int dim() const { return dim_; }
    /// Homogeneous degree (0 for the zero object), nullopt for mixed degrees.
    std::optional<int> degree() const;
    Geom component(int degree) const;
    int max_degree() const;

    Geom& operator+=(const Geom& o);
    Geom& operator-=(const Geom& o);
    friend Geom operator+(Geom a, const Geom& b) { return a += b; }
    friend Geom operator-(Geom a, const Geom& b) { return a -= b; }
    friend Geom operator*(Geom a, const Scalar& c);
    friend Geom operator*(const Scalar& c, Geom a) { return std::move(a) * c; }
    /// Wedge product (pointwise product on functions).
    friend Geom operator*(const Geom& a, const Geom& b);
    Geom operator-() const { return *this * Scalar(-1); }
    friend bool operator==(const Geom& a, const Geom& b);

    Geom hbar_shift(unsigned k) const;
    /// Terms of a fixed hbar order, as an hbar-free object.
    Geom order(unsigned h) const;
    /// Coefficient-wise substitution of a symbol.
    Geom substitute(int var, const Scalar& value) const;
    /// Same terms regarded as another kind (only for degree-zero objects or
    /// matching kinds).
    Geom as_kind(GeomKind k) const;

    std::string to_string() const;

private:
    void adopt(const Geom& o);
    GeomKind kind_ = GeomKind::Function;
    int dim_ = 0;
};

std::string coordinate_name(int i);

/// Partial derivative of every coefficient.
Geom partial_derivative(const Geom& g, int i);
/// X(f) for a vector field X.
Geom vf_apply(const Geom& x, const Geom& f);
/// Schouten-Nijenhuis bracket; [X,Y] on vector fields, X(a) on a function.
Geom schouten(const Geom& p, const Geom& q);
inline Geom vf_bracket(const Geom& x, const Geom& y) { return schouten(x, y); }
Geom exterior_derivative(const Geom& w);
/// i_X; degree-zero X acts by multiplication, i_{X^Y} = i_X i_Y.
Geom insert(const Geom& x, const Geom& w);
/// L_X = [i_X, d] (graded commutator).
Geom lie_form(const Geom& x, const Geom& w);
/// Classical *: conjugate coefficients, x^i real, del_i^* = -del_i,
/// (dx^i)^* = -dx^i, (A ^ B)^* = B^* ^ A^*.
Geom star_involution(const Geom& g);

/// Lie algebra homomorphism g -> vector fields, extended to the U(g) action
/// on functions, multivectors (Schouten with the field) and forms (Lie
/// derivative).
class Realization {
public:
    static std::shared_ptr<const Realization> create(LiePtr alg, int dim, std::vector<Geom> fields);
    /// The so(2,1) fields H, E, Ep on R^3 preserving (1/2) x1 x3 + (a/2) x2^2 + c.
    static std::shared_ptr<const Realization> hyperboloid();
    /// Same fields with sqrt(a) replaced by a fixed value.
    static std::shared_ptr<const Realization> hyperboloid(const Scalar& sqrt_a);
    /// Coordinate translations P_i -> del_i of the abelian algebra on R^n.
    static std::shared_ptr<const Realization> translations(int n);

    const LiePtr& algebra() const { return alg_; }
    int dim() const { return dim_; }
    const Geom& field(int i) const { return fields_.at(static_cast<std::size_t>(i)); }

    /// [phi(e_i), phi(e_j)] - phi([e_i, e_j]).
    Geom bracket_residual(int i, int j) const;
    /// First pair i < j with a nonzero residual.
    std::optional<std::pair<int, int>> failing_pair() const;

    Geom act_generator(int i, const Geom& obj) const;
    Geom act(const Exps& m, const Geom& obj) const;
    Geom act(const PBWElement& xi, const Geom& obj) const;

private:
    Realization() = default;
    const Geom& act_basis(const Exps& m, GeomKind kind, const GMono& b) const;

    LiePtr alg_;
    int dim_ = 0;
    std::vector<Geom> fields_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<Exps, GeomKind, GMono>, Geom> cache_;
};

using RealizationPtr = std::shared_ptr<const Realization>;

inline Geom hopf_act(const Realization& phi, const PBWElement& xi, const Geom& obj) { return phi.act(xi, obj); }

/// sum c hbar^h op(T_1 |> a, T_2 |> b) over the terms of a 2-tensor;
/// terms whose hbar power already exceeds the truncation order are skipped.
Geom contract2(const Realization& phi, const TensorElement& t, const Geom& a, const Geom& b,
               const std::function<Geom(const Geom&, const Geom&)>& op);

std::ostream& operator<<(std::ostream& os, const Geom& g);

}  // namespace hopftwist
