#pragma once

#include <cmath>
#include <cstdint>

#include "relnum/errors.hpp"
#include "relnum/scalar.hpp"
#include "relnum/word.hpp"

namespace relnum {

// 2x2 matrix over a commutative ring T. Everything this library builds has
// determinant one; that is checked at the construction surfaces, not per multiply.
template <typename T>
struct Mat2 {
    T a, b, c, d;  // row-major

    static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

    T det() const { return a * d - b * c; }
    T trace() const { return a + d; }

    // valid for determinant-1 matrices only
    Mat2 inverse() const { return {d, -b, -c, a}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

// binary exponentiation, n >= 0
template <typename T>
Mat2<T> pow(const Mat2<T>& m, Int n) {
    Mat2<T> result = Mat2<T>::identity();
    Mat2<T> base = m;
    while (n > 0) {
        if ((n & 1) != 0) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

template <typename T>
Mat2<T> pow_signed(const Mat2<T>& m, const Int& n) {
    return n < 0 ? pow(m.inverse(), -n) : pow(m, n);
}

using ScalarMat2 = Mat2<Scalar>;

inline ScalarMat2 gen_A() {
    return {Scalar(1), Scalar(1), Scalar(0), Scalar(1)};
}

inline ScalarMat2 gen_B(const Scalar& alpha) {
    return {Scalar(1), Scalar(0), alpha, Scalar(1)};
}

// left-to-right product of generator powers, so "B^-2 A B^-1 A" is
// B^-2 * A * B^-1 * A as matrices
inline ScalarMat2 evaluate_word(const ReducedWord& w, const Scalar& alpha) {
    ScalarMat2 m = ScalarMat2::identity();
    for (const auto& syl : w.syllables()) {
        const ScalarMat2 base = (syl.gen == Gen::x1) ? gen_A() : gen_B(alpha);
        m = m * pow_signed(base, syl.exp);
    }
    return m;
}

// off-diagonal negation; conjugation matching the exponent-flip automorphism:
// mirror_matrix(evaluate_word(w, a)) == evaluate_word(mirror_word(w), a)
inline ScalarMat2 mirror_matrix(const ScalarMat2& m) {
    return {m.a, -m.b, -m.c, m.d};
}

// ---------------------------------------------------------------------------
// ProjPoint: the projective line R u {inf} in canonical homogeneous form,
// q = 1 for finite points and (1, 0) for infinity.
// ---------------------------------------------------------------------------

struct ProjPoint {
    Scalar p;
    Scalar q;

    static ProjPoint infinity() { return {Scalar(1), Scalar(0)}; }
    static ProjPoint zero() { return {Scalar(0), Scalar(1)}; }
    static ProjPoint finite(Scalar v) { return {std::move(v), Scalar(1)}; }

    bool is_infinite() const { return q.is_zero(); }

    // finite points only
    const Scalar& value() const {
        if (is_infinite()) throw Error("value() on the point at infinity");
        return p;
    }

    friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
        return x.p == y.p && x.q == y.q;
    }
    friend bool operator!=(const ProjPoint& x, const ProjPoint& y) { return !(x == y); }
};

// total order used for canonical choices: finite points by value, infinity last
inline bool proj_less(const ProjPoint& x, const ProjPoint& y) {
    if (x.is_infinite()) return false;
    if (y.is_infinite()) return true;
    return x.p < y.p;
}

inline std::string to_string(const ProjPoint& x) {
    return x.is_infinite() ? "inf" : to_string(x.p);
}

inline ProjPoint parse_proj_point(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "infinity") return ProjPoint::infinity();
    return ProjPoint::finite(parse_scalar(s));
}

inline ProjPoint moebius_apply(const ScalarMat2& m, const ProjPoint& x) {
    Scalar np = m.a * x.p + m.b * x.q;
    Scalar nq = m.c * x.p + m.d * x.q;
    if (nq.is_zero()) {
        if (np.is_zero()) throw InternalInconsistency("singular matrix in moebius_apply");
        return ProjPoint::infinity();
    }
    return ProjPoint::finite(np / nq);
}

inline std::size_t hash_value(const ProjPoint& x) {
    std::size_t seed = hash_value(x.p);
    boost::hash_combine(seed, x.q.is_zero());
    return seed;
}

// ---------------------------------------------------------------------------
// Trace classification and rotation numbers
// ---------------------------------------------------------------------------

enum class TraceClass { elliptic, parabolic, hyperbolic };

inline TraceClass trace_classify(const ScalarMat2& m) {
    Scalar tr = m.trace();
    int below = exact_sign(tr - Scalar(2));   // tr - 2
    int above = exact_sign(tr + Scalar(2));   // tr + 2
    if (below == 0 || above == 0) return TraceClass::parabolic;
    if (below < 0 && above > 0) return TraceClass::elliptic;
    return TraceClass::hyperbolic;
}

inline const char* to_string(TraceClass t) {
    switch (t) {
        case TraceClass::elliptic: return "elliptic";
        case TraceClass::parabolic: return "parabolic";
        default: return "hyperbolic";
    }
}

// rot(B_a A^-1) = acos((2-a)/2) / pi for a in (0,4). The one approximate
// operation in the library; guides searches, certifies nothing.
inline double rotation_number(const Scalar& alpha) {
    if (exact_sign(alpha) <= 0 || exact_sign(alpha - Scalar(4)) >= 0)
        throw NotElliptic("rotation number needs 0 < alpha < 4, got " + to_string(alpha));
    double a = to_double(alpha);
    return std::acos((2.0 - a) / 2.0) / std::acos(-1.0);
}

}  // namespace relnum
