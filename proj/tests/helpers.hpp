#pragma once

#include <random>

#include "relnum/scalar.hpp"
#include "relnum/word.hpp"

namespace relnum::test {

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, long long lo, long long hi) {
    return Int(std::uniform_int_distribution<long long>(lo, hi)(rng));
}

inline BigRational rand_rational(Rng& rng, long long max_num = 50, long long max_den = 20) {
    return BigRational(rand_int(rng, -max_num, max_num), rand_int(rng, 1, max_den));
}

inline BigRational rand_nonzero_rational(Rng& rng, long long max_num = 50,
                                         long long max_den = 20) {
    for (;;) {
        BigRational r = rand_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline Scalar rand_quad(Rng& rng, long long d) {
    return Scalar::quadratic(rand_rational(rng), rand_rational(rng), Int(d));
}

inline ReducedWord rand_word(Rng& rng, int max_syllables = 5, int max_exp = 3) {
    ReducedWord w;
    int n = static_cast<int>(std::uniform_int_distribution<int>(0, max_syllables)(rng));
    for (int i = 0; i < n; ++i) {
        Gen g = std::uniform_int_distribution<int>(0, 1)(rng) ? Gen::x1 : Gen::x2;
        Int e = rand_int(rng, 1, max_exp);
        if (std::uniform_int_distribution<int>(0, 1)(rng)) e = -e;
        w.push(g, e);
    }
    return w;
}

}  // namespace relnum::test
