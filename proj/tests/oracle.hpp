#pragma once

// Test-only generator of integer polynomials whose real-root structure is
// known by construction, independent of every root-isolation code path.

#include <vector>

#include "helpers.hpp"
#include "relnum/poly.hpp"

namespace relnum::test {

struct KnownPoly {
    IntPoly p;
    int distinct_real_roots = 0;
};

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// product of rational-root linear factors with multiplicities and at most one
// quadratic factor, degree <= 6
inline KnownPoly random_known_poly(Rng& rng) {
    KnownPoly out;
    int budget = 6;

    std::vector<std::pair<Int, Int>> roots;  // (num, den), reduced, distinct
    int want = std::uniform_int_distribution<int>(0, 3)(rng);
    IntPoly p = IntPoly::constant(rand_int(rng, 1, 5));
    if (rand_int(rng, 0, 1) == 1) p = -p;

    for (int i = 0; i < want && budget > 0; ++i) {
        BigRational r = rand_rational(rng, 6, 4);
        bool dup = false;
        for (const auto& [n, d] : roots) dup = dup || (n == r.num && d == r.den);
        if (dup) continue;
        roots.emplace_back(r.num, r.den);
        int mult = budget >= 2 && rand_int(rng, 0, 2) == 0 ? 2 : 1;
        IntPoly factor;  // den*x - num
        factor.c = {-r.num, r.den};
        for (int m = 0; m < mult; ++m) p = p * factor;
        budget -= mult;
        ++out.distinct_real_roots;
    }

    if (budget >= 2 && rand_int(rng, 0, 1) == 0) {
        Int a = rand_int(rng, 1, 4);
        Int b = rand_int(rng, -6, 6);
        Int c = rand_int(rng, -6, 6);
        Int disc = b * b - 4 * a * c;
        // skip discriminants with rational roots; they could collide with the
        // linear factors and the count would need care
        if (disc < 0 || (disc > 0 && !is_square(disc))) {
            IntPoly quad;
            quad.c = {c, b, a};
            int mult = budget >= 4 && rand_int(rng, 0, 3) == 0 ? 2 : 1;
            for (int m = 0; m < mult; ++m) p = p * quad;
            budget -= 2 * mult;
            if (disc > 0) out.distinct_real_roots += 2;
        }
    }

    out.p = p;
    return out;
}

}  // namespace relnum::test
