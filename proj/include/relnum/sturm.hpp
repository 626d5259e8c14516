#pragma once

#include <optional>
#include <vector>

#include "relnum/errors.hpp"
#include "relnum/poly.hpp"
#include "relnum/scalar.hpp"

namespace relnum {

// Sturm sequence: p, p', then negated remainders, each content-reduced.
// Sign-variation counts are well-defined at any rational that is not a
// multiple root of p.
struct SturmChain {
    std::vector<IntPoly> polys;
};

inline SturmChain sturm_chain(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPoly();
    SturmChain chain;
    chain.polys.push_back(p);
    IntPoly d = derivative(p);
    if (d.is_zero()) return chain;
    chain.polys.push_back(d);
    while (true) {
        const IntPoly& a = chain.polys[chain.polys.size() - 2];
        const IntPoly& b = chain.polys.back();
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        // pseudo_rem scales by lc(b)^(delta+1); undo a negative multiplier so r
        // stays a positive multiple of the true remainder
        int delta = a.degree() - b.degree();
        if (b.lc() < 0 && (delta + 1) % 2 == 1) r = -r;
        chain.polys.push_back(-primitive_part(r));
    }
    return chain;
}

// evaluation bound: -inf, a rational, or +inf
struct Bound {
    enum class Kind { neg_inf, finite, pos_inf } kind;
    BigRational value;

    static Bound neg_inf() { return {Kind::neg_inf, {}}; }
    static Bound pos_inf() { return {Kind::pos_inf, {}}; }
    static Bound at(BigRational v) { return {Kind::finite, std::move(v)}; }
};

inline int sign_at(const IntPoly& p, const Bound& b) {
    switch (b.kind) {
        case Bound::Kind::neg_inf: return sign_at_neg_inf(p);
        case Bound::Kind::pos_inf: return sign_at_pos_inf(p);
        default: return sign_at(p, b.value);
    }
}

inline int sign_variations(const SturmChain& chain, const Bound& b) {
    int variations = 0;
    int prev = 0;
    for (const auto& q : chain.polys) {
        int s = sign_at(q, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// number of distinct real roots in (lo, hi]
inline int count_roots(const SturmChain& chain, const Bound& lo, const Bound& hi) {
    if (lo.kind == Bound::Kind::finite && hi.kind == Bound::Kind::finite &&
        !(lo.value < hi.value))
        throw Error("count_roots needs lo < hi");
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

inline int count_all_roots(const SturmChain& chain) {
    return count_roots(chain, Bound::neg_inf(), Bound::pos_inf());
}

// Rational interval certified to contain exactly one real root, counted on (lo, hi].
struct IsolatingInterval {
    BigRational lo;
    BigRational hi;

    BigRational width() const { return hi - lo; }
    BigRational midpoint() const { return (lo + hi) / BigRational(Int(2)); }

    friend bool operator==(const IsolatingInterval& x, const IsolatingInterval& y) {
        return x.lo == y.lo && x.hi == y.hi;
    }
};

// 1 + max|a_i| / |a_n|; every real root lies strictly inside (-B, B)
inline BigRational cauchy_bound(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPoly();
    Int maxabs = 0;
    for (size_t i = 0; i + 1 < p.c.size(); ++i) maxabs = std::max(maxabs, abs_of(p.c[i]));
    return BigRational(maxabs, abs_of(p.lc())) + BigRational(Int(1));
}

namespace detail {

inline void isolate_rec(const SturmChain& chain, const BigRational& lo, const BigRational& hi,
                        int count, std::vector<IsolatingInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    BigRational mid = (lo + hi) / BigRational(Int(2));
    int left = count_roots(chain, Bound::at(lo), Bound::at(mid));
    isolate_rec(chain, lo, mid, left, out);
    isolate_rec(chain, mid, hi, count - left, out);
}

}  // namespace detail

// Disjoint intervals, one per distinct real root, ascending. Non-squarefree
// inputs are reduced to their squarefree part first; *was_squarefree reports it.
inline std::vector<IsolatingInterval> isolate_all(const IntPoly& p,
                                                  bool* was_squarefree = nullptr) {
    if (p.is_zero()) throw ZeroPoly();
    IntPoly sf = squarefree_part(p);
    if (was_squarefree) *was_squarefree = (sf.degree() == primitive_part(p).degree());
    std::vector<IsolatingInterval> out;
    if (sf.degree() <= 0) return out;
    SturmChain chain = sturm_chain(sf);
    BigRational bound = cauchy_bound(sf);
    int total = count_roots(chain, Bound::at(-bound), Bound::at(bound));
    detail::isolate_rec(chain, -bound, bound, total, out);
    return out;
}

// Shrinks iv to width <= target, still isolating the same root. An exact
// rational root hit at a midpoint collapses to a small interval around it.
inline IsolatingInterval refine(const IntPoly& p, IsolatingInterval iv,
                                const BigRational& target) {
    if (target.sign() <= 0) throw Error("refine needs positive width");
    IntPoly sf = squarefree_part(p);
    SturmChain chain = sturm_chain(sf);
    BigRational half = target / BigRational(Int(2));
    while (iv.width() > target) {
        BigRational mid = iv.midpoint();
        if (sign_at(sf, mid) == 0) {
            BigRational lo = mid - half;
            BigRational hi = mid + half;
            if (lo < iv.lo) lo = iv.lo;
            if (iv.hi < hi) hi = iv.hi;
            return {lo, hi};
        }
        if (count_roots(chain, Bound::at(iv.lo), Bound::at(mid)) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

inline IsolatingInterval max_root(const IntPoly& p, const BigRational& width) {
    auto intervals = isolate_all(p);
    if (intervals.empty()) throw NoRealRoot();
    return refine(p, intervals.back(), width);
}

}  // namespace relnum
