#pragma once

#include <iosfwd>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopftwist {

/// Raised when an algebraic operation has no exact answer (non-unit inverse,
/// division by zero, ...).
class AlgebraError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact element of Q(i).
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    Gaussian(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Gaussian rational(long p, long q) { return Gaussian(mpq_class(p, q)); }
    static Gaussian imaginary_unit() { return Gaussian(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    Gaussian inverse() const;

    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// True when the printed form should carry a leading minus sign.
    bool looks_negative() const { return sgn(re_) < 0 || (sgn(re_) == 0 && sgn(im_) < 0); }
    /// Single factor rendering, e.g. "3/2", "i", "(1+2*i)".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline constexpr std::size_t kMaxSymbols = 8;

/// Exponent vector over the declared parameter / radical symbols.
using SymbolMono = std::array<std::uint8_t, kMaxSymbols>;

/// Graded lexicographic order: total degree first, then the earlier symbol wins.
struct GrlexLess {
    bool operator()(const SymbolMono& a, const SymbolMono& b) const;
};

class ParamPoly;

// Global symbol registry. Symbols are append-only; indices are stable.
int declare_parameter(std::string_view name);
/// Declares a radical symbol s with s^2 = square. `square` may only use
/// previously declared symbols.
int declare_radical(std::string_view name, const ParamPoly& square);
std::optional<int> find_symbol(std::string_view name);
const std::string& symbol_name(int index);
bool is_radical(int index);
const ParamPoly& radical_square(int index);
int symbol_count();

/// Polynomial in the declared symbols with Gaussian rational coefficients.
/// Radical symbols are treated as free variables here; reduction by the
/// defining relations happens through reduce_radicals().
class ParamPoly {
public:
    using Terms = std::map<SymbolMono, Gaussian, GrlexLess>;

    ParamPoly() = default;
    ParamPoly(const Gaussian& c);  // NOLINT(google-explicit-constructor)
    static ParamPoly symbol(int index, unsigned power = 1);
    static ParamPoly monomial(const SymbolMono& m, const Gaussian& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Constant coefficient when is_constant().
    Gaussian constant() const;

    const SymbolMono& leading_mono() const { return terms_.rbegin()->first; }
    const Gaussian& leading_coeff() const { return terms_.rbegin()->second; }

    unsigned degree_in(int var) const;
    /// Coefficient of x_var^k, as a polynomial free of x_var.
    ParamPoly coeff_in(int var, unsigned k) const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly operator-() const;
    ParamPoly scaled(const Gaussian& c) const;
    ParamPoly shifted(const SymbolMono& m) const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

    ParamPoly conj() const;
    /// Replace radical r by -r.
    ParamPoly flip_radical(int r) const;
    ParamPoly reduce_radicals() const;
    bool uses_radicals() const;
    bool uses_symbol(int var) const;
    ParamPoly substitute(int var, const ParamPoly& value) const;

    /// Exact quotient in the polynomial ring, or nullopt if not divisible.
    std::optional<ParamPoly> divide_exact(const ParamPoly& d) const;
    ParamPoly monic() const;

    /// Sum rendering ("a + 2*c"), "0" when empty.
    std::string to_string() const;
    std::size_t term_count() const { return terms_.size(); }

private:
    void add_term(const SymbolMono& m, const Gaussian& c);
    Terms terms_;
};

/// Monic greatest common divisor in Q(i)[symbols] (radicals as free variables).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// Exact element of the field Q(i)(parameters)(radicals). Normal form:
/// numerator with radical degrees < 2, radical-free monic denominator,
/// numerator and denominator coprime.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : num_(Gaussian(v)), den_(Gaussian(1)) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Gaussian& g) : num_(g), den_(Gaussian(1)) {}  // NOLINT(google-explicit-constructor)
    Scalar(ParamPoly num, ParamPoly den);

    static Scalar rational(long p, long q) { return Scalar(Gaussian(mpq_class(p, q))); }
    static Scalar i() { return Scalar(Gaussian::imaginary_unit()); }
    /// Declares (if needed) and returns the parameter `name`.
    static Scalar param(std::string_view name);
    /// Declares (if needed) and returns sqrt(name) for a parameter `name`.
    static Scalar sqrt_param(std::string_view name);
    static Scalar symbol(int index) { return Scalar(ParamPoly::symbol(index), Gaussian(1)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True if the value lies in Q(i).
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Gaussian constant() const { return num_.constant(); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Scalar inverse() const;
    Scalar pow(unsigned k) const;
    /// Complex conjugation; parameters and radicals are real.
    Scalar conj() const;
    /// Substitute the symbol `name` by `value` (e.g. a -> 1 together with sqrt(a) -> 1).
    Scalar substitute(int var, const Scalar& value) const;

    /// Single-term numerator over unit denominator (prints without parentheses).
    bool is_monomial() const { return den_.is_one() && num_.term_count() <= 1; }
    bool looks_negative() const;
    std::string to_string() const;

private:
    void normalize();
    ParamPoly num_;
    ParamPoly den_{Gaussian(1)};
};

/// sqrt of a scalar when it is a perfect rational square or a declared
/// parameter (returning the radical symbol).
Scalar scalar_sqrt(const Scalar& s);

/// Renders "coeff*factor" with the coefficient elided when it is 1 and a
/// leading '-' for negative looking coefficients. `factor` empty means the
/// constant term.
std::string render_term(const Scalar& coeff, const std::string& factor, bool first);

std::ostream& operator<<(std::ostream& os, const Gaussian& g);
std::ostream& operator<<(std::ostream& os, const ParamPoly& p);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopftwist
