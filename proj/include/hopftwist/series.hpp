#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hopftwist/scalar.hpp"

namespace hopftwist {

/// Engine-wide truncation order N in hbar (default 4).
unsigned truncation_order();
void set_truncation_order(unsigned n);

/// Sets the truncation order for the lifetime of the guard.
class ScopedOrder {
public:
    explicit ScopedOrder(unsigned n) : saved_(truncation_order()) { set_truncation_order(n); }
    ~ScopedOrder() { set_truncation_order(saved_); }
    ScopedOrder(const ScopedOrder&) = delete;
    ScopedOrder& operator=(const ScopedOrder&) = delete;

private:
    unsigned saved_;
};

/// Truncated power series c0 + c1 hbar + ... + cN hbar^N.
class HbarSeries {
public:
    HbarSeries() : HbarSeries(truncation_order()) {}
    explicit HbarSeries(unsigned order) : c_(order + 1) {}
    HbarSeries(const Scalar& c0, unsigned order);
    static HbarSeries constant(const Scalar& c0) { return HbarSeries(c0, truncation_order()); }
    /// The series hbar (zero when the order is 0).
    static HbarSeries hbar(unsigned order);
    static HbarSeries hbar() { return hbar(truncation_order()); }

    unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
    const Scalar& operator[](unsigned k) const { return c_.at(k); }
    Scalar& operator[](unsigned k) { return c_.at(k); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_unit() const { return !c_[0].is_zero(); }

    HbarSeries& operator+=(const HbarSeries& o);
    HbarSeries& operator-=(const HbarSeries& o);
    friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
    friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) { return a -= b; }
    friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
    friend HbarSeries operator*(HbarSeries a, const Scalar& s);
    HbarSeries operator-() const;

    friend bool operator==(const HbarSeries& a, const HbarSeries& b);

    HbarSeries inverse() const;
    HbarSeries conj() const;
    std::string to_string() const;

private:
    void check_order(const HbarSeries& o) const;
    std::vector<Scalar> c_;
};

HbarSeries series_exp(const HbarSeries& u);
HbarSeries series_log1p(const HbarSeries& u);

std::ostream& operator<<(std::ostream& os, const HbarSeries& s);

}  // namespace hopftwist
