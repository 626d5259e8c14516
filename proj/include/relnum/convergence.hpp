#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "relnum/errors.hpp"
#include "relnum/matrix.hpp"
#include "relnum/poly_matrix.hpp"
#include "relnum/sturm.hpp"

namespace relnum {

// alpha_n, the maximal real root of relation_poly(n), as an isolating interval
struct AlphaEntry {
    int n = 0;
    IsolatingInterval interval;
    std::string approx;
};

namespace detail {

// exact check that every real root of p lies below 4
inline bool roots_below_four(const IntPoly& p) {
    IntPoly sf = squarefree_part(p);
    if (sign_at(sf, BigRational(Int(4))) == 0) return false;
    SturmChain chain = sturm_chain(sf);
    return count_roots(chain, Bound::at(BigRational(Int(4))), Bound::pos_inf()) == 0;
}

}  // namespace detail

// Maximal roots for n = 1..N, each interval refined to width <= `width`,
// certified strictly increasing (disjoint ordered intervals) and < 4.
inline std::vector<AlphaEntry> alpha_sequence(int N, const BigRational& width) {
    if (N < 1) throw Error("alpha_sequence needs N >= 1");
    std::vector<IntPoly> polys;
    std::vector<AlphaEntry> entries;
    for (int n = 1; n <= N; ++n) {
        IntPoly p = relation_poly(n);
        if (!detail::roots_below_four(p))
            throw InternalInconsistency("root of p_n at or above 4");
        AlphaEntry e;
        e.n = n;
        e.interval = max_root(p, width);
        entries.push_back(std::move(e));
        polys.push_back(std::move(p));
    }
    // separate consecutive intervals; distinct roots always separate eventually
    for (int i = 0; i + 1 < N; ++i) {
        BigRational w = width;
        int rounds = 0;
        while (!(entries[i].interval.hi < entries[i + 1].interval.lo)) {
            if (++rounds > 64)
                throw PrecisionExhausted("maximal roots of p_" + std::to_string(i + 1) +
                                         " and p_" + std::to_string(i + 2) +
                                         " did not separate");
            w = w / BigRational(Int(2));
            entries[i].interval = refine(polys[i], entries[i].interval, w);
            entries[i + 1].interval = refine(polys[i + 1], entries[i + 1].interval, w);
        }
    }
    for (auto& e : entries) e.approx = decimal_string(e.interval.midpoint());
    return entries;
}

// exact rational upper bound on 4 - alpha_n (slack at most `width`)
inline BigRational gap_to_four(int n, const BigRational& width) {
    if (n < 1) throw Error("gap_to_four needs n >= 1");
    IsolatingInterval iv = max_root(relation_poly(n), width);
    return BigRational(Int(4)) - iv.lo;
}

// least n <= n_cap with gap_to_four(n) < eps, empty if none within the cap
inline std::optional<int> find_N_for_epsilon(const BigRational& eps, int n_cap) {
    if (eps.sign() <= 0) throw Error("find_N_for_epsilon needs eps > 0");
    BigRational width = eps / BigRational(Int(8));
    for (int n = 1; n <= n_cap; ++n) {
        if (gap_to_four(n, width) < eps) return n;
    }
    return std::nullopt;
}

// (B_4 A^-1)^n (0) = n / (2n+1), cross-checked against the signed closed-form
// power (-1)^n [[1-2n, n], [-4n, 1+2n]]
inline BigRational b4_orbit_value(const Int& n) {
    if (n < 0) throw Error("b4_orbit_value needs n >= 0");
    ScalarMat2 step = gen_B(Scalar(4)) * gen_A().inverse();
    ScalarMat2 m = pow(step, n);
    int s = (n % 2 == 0) ? 1 : -1;
    ScalarMat2 closed = {Scalar(Int(s * (1 - 2 * n))), Scalar(Int(s * n)),
                         Scalar(Int(s * -4 * n)), Scalar(Int(s * (1 + 2 * n)))};
    if (m != closed) throw InternalInconsistency("closed form of (B_4 A^-1)^n mismatch");
    ProjPoint image = moebius_apply(m, ProjPoint::zero());
    BigRational value = image.value().rat();
    if (value != BigRational(n, 2 * n + 1))
        throw InternalInconsistency("(B_4 A^-1)^n (0) != n/(2n+1)");
    return value;
}

// true iff u_n - t l_n has exactly n distinct real roots, so the rational map
// u_n / l_n takes the value t on exactly n fibers
inline bool winding_count_check(int n, const BigRational& t) {
    IntPoly q = preimage_poly(n, t);
    return count_all_roots(sturm_chain(squarefree_part(q))) == n;
}

// Wronskian certificate: u'l - ul' sign-definite negative means u/l is
// strictly decreasing wherever finite (and -l/u at the poles)
inline bool clockwise_pair_check(const IntPoly& u, const IntPoly& l) {
    IntPoly w = derivative(u) * l - u * derivative(l);
    if (w.is_zero()) return false;
    if (sign_at(w, BigRational(Int(0))) != -1) return false;
    return count_all_roots(sturm_chain(squarefree_part(w))) == 0;
}

inline bool clockwise_check(int n) {
    PolyMat2 pm = power_matrix(n);
    return clockwise_pair_check(pm.u, pm.l);
}

// ---------------------------------------------------------------------------
// Rotation-number density scan: informational only, never a certificate.
// ---------------------------------------------------------------------------

struct RotationSample {
    BigRational alpha;
    double rot = 0.0;
    bool looks_rational = false;
    long long num = 0, den = 1;  // convergent when looks_rational
    int cf_depth = 0;
};

// continued-fraction expansion of a double, stopping at noise level
inline RotationSample classify_rotation(const BigRational& alpha) {
    RotationSample s;
    s.alpha = alpha;
    s.rot = rotation_number(Scalar(alpha));
    double x = s.rot;
    long long p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // convergents
    double frac = x;
    for (int depth = 1; depth <= 24; ++depth) {
        double a = std::floor(frac);
        long long ai = static_cast<long long>(a);
        long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        s.cf_depth = depth;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - x) < 1e-9) {
            s.looks_rational = q1 <= 1000;
            s.num = p1;
            s.den = q1;
            break;
        }
        double rem = frac - a;
        if (rem < 1e-12) break;
        frac = 1.0 / rem;
    }
    return s;
}

inline std::vector<RotationSample> rotation_density_scan(const BigRational& lo,
                                                         const BigRational& hi,
                                                         int samples) {
    if (!(BigRational(Int(3)) <= lo && lo < hi && hi <= BigRational(Int(4))))
        throw Error("rotation_density_scan needs 3 <= lo < hi <= 4");
    std::vector<RotationSample> out;
    BigRational span = hi - lo;
    for (int i = 1; i <= samples; ++i) {
        BigRational a = lo + span * BigRational(Int(i), Int(samples + 1));
        out.push_back(classify_rotation(a));
    }
    return out;
}

}  // namespace relnum
