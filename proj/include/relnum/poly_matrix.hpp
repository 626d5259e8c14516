#pragma once

#include "relnum/errors.hpp"
#include "relnum/matrix.hpp"
#include "relnum/poly.hpp"

namespace relnum {

// entries of (B_alpha A^-1)^n as integer polynomials in alpha:
//   [ t_n  u_n ]
//   [ m_n  l_n ]
struct PolyMat2 {
    IntPoly t, u, m, l;
};

// one-step matrix B_alpha A^-1 = [[1, -1], [alpha, 1 - alpha]]
inline Mat2<IntPoly> step_matrix() {
    return {IntPoly{1}, IntPoly{-1}, IntPoly{0, 1}, IntPoly{1, -1}};
}

inline PolyMat2 power_matrix(int n) {
    if (n < 1) throw Error("power_matrix needs n >= 1");
    Mat2<IntPoly> m = pow(step_matrix(), Int(n));
    return {m.a, m.b, m.c, m.d};
}

// p_n = (-1)^(n+1) (2 u_n - l_n); monic of degree n, roots are relation numbers
inline IntPoly relation_poly(int n) {
    PolyMat2 pm = power_matrix(n);
    IntPoly q = pm.u * Int(2) - pm.l;
    return (n % 2 == 1) ? q : -q;
}

// W_n = u_n' l_n - u_n l_n'; the numerator of d/dalpha (u_n / l_n)
inline IntPoly wronskian(int n) {
    PolyMat2 pm = power_matrix(n);
    return derivative(pm.u) * pm.l - pm.u * derivative(pm.l);
}

// content-reduced numerator of u_n - t * l_n; degree exactly n for t != 0
inline IntPoly preimage_poly(int n, const BigRational& t) {
    if (t.is_zero()) throw DegenerateTarget();
    PolyMat2 pm = power_matrix(n);
    return primitive_part(pm.u * t.den - pm.l * t.num);
}

}  // namespace relnum
