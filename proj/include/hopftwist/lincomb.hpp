#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "hopftwist/scalar.hpp"
#include "hopftwist/series.hpp"

namespace hopftwist {

/// A basis element together with its power of hbar.
template <class Mono>
struct HKey {
    std::uint8_t h = 0;
    Mono m{};
    auto operator<=>(const HKey&) const = default;
    bool operator==(const HKey&) const = default;
};

/// Finite sum  sum c * hbar^h * m  with exact coefficients. Terms with
/// h above the engine truncation order are dropped on insertion.
template <class Mono>
class LinComb {
public:
    using Key = HKey<Mono>;
    using Map = std::map<Key, Scalar>;

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(unsigned h, const Mono& m, const Scalar& c) {
        if (c.is_zero() || h > truncation_order()) return;
        Key k{static_cast<std::uint8_t>(h), m};
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Adds c * hbar^shift * other.
    void add_scaled(const LinComb& o, const Scalar& c, unsigned shift = 0) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k.h + shift, k.m, c.is_one() ? v : v * c);
    }

    /// Smallest hbar power present (truncation_order()+1 when zero).
    unsigned min_h() const {
        unsigned m = truncation_order() + 1;
        for (const auto& [k, v] : terms_) m = std::min<unsigned>(m, k.h);
        return m;
    }

    /// Coefficient series of a given basis element.
    HbarSeries coefficient(const Mono& m) const {
        HbarSeries s;
        for (const auto& [k, v] : terms_)
            if (k.m == m) s[k.h] = v;
        return s;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

protected:
    LinComb& plus(const LinComb& o) {
        for (const auto& [k, v] : o.terms_) add(k.h, k.m, v);
        return *this;
    }
    LinComb& minus(const LinComb& o) {
        for (const auto& [k, v] : o.terms_) add(k.h, k.m, -v);
        return *this;
    }
    void scale_in_place(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [k, v] : terms_) v *= c;
    }
    void hbar_shift_in_place(unsigned s) {
        if (s == 0) return;
        Map out;
        for (auto& [k, v] : terms_)
            if (k.h + s <= truncation_order()) out.emplace(Key{static_cast<std::uint8_t>(k.h + s), k.m}, std::move(v));
        terms_ = std::move(out);
    }
    Map terms_;
};

}  // namespace hopftwist
