#pragma once

#include <random>

#include "hopftwist/lie.hpp"
#include "hopftwist/scalar.hpp"
#include "hopftwist/series.hpp"

namespace hopftwist::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240917u);
    return gen;
}

inline long small_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Scalar random_rational() {
    long q = small_int(1, 5);
    return Scalar(Gaussian(mpq_class(small_int(-6, 6), q), mpq_class(small_int(-3, 3), small_int(1, 3))));
}

/// Random element of Q(i)(a)(sqrt a) with small numerator and denominator.
inline Scalar random_scalar() {
    Scalar a = Scalar::param("a"), s = Scalar::sqrt_param("a"), c = Scalar::param("c");
    Scalar num = random_rational() + random_rational() * a + random_rational() * s;
    if (small_int(0, 2) == 0) num += random_rational() * c;
    Scalar den = Scalar(1);
    if (small_int(0, 2) == 0) den = Scalar(1) + random_rational() * a;
    if (small_int(0, 3) == 0) den = s + Scalar(small_int(1, 3));
    return num / den;
}

inline HbarSeries random_series(bool zero_constant = false) {
    HbarSeries s;
    for (unsigned k = zero_constant ? 1 : 0; k <= s.order(); ++k)
        if (small_int(0, 3) != 0) s[k] = random_rational();
    return s;
}

inline PBWElement random_pbw(const LiePtr& alg, unsigned max_degree = 2, int terms = 3) {
    PBWElement x(alg);
    for (int t = 0; t < terms; ++t) {
        Exps m{};
        unsigned d = static_cast<unsigned>(small_int(0, max_degree));
        for (unsigned j = 0; j < d; ++j) ++m[static_cast<std::size_t>(small_int(0, alg->dim() - 1))];
        x.add(static_cast<unsigned>(small_int(0, 1)), m, random_rational());
    }
    return x;
}

inline std::vector<int> random_word(const LiePtr& alg, int length) {
    std::vector<int> w;
    for (int i = 0; i < length; ++i) w.push_back(static_cast<int>(small_int(0, alg->dim() - 1)));
    return w;
}

}  // namespace hopftwist::testing
