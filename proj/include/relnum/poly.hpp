#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "relnum/errors.hpp"
#include "relnum/scalar.hpp"

namespace relnum {

// Univariate polynomial with big-integer coefficients, dense ascending,
// no trailing zeros; the zero polynomial is the empty list.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    IntPoly(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c.emplace_back(v);
        trim();
    }
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int v) {
        IntPoly p;
        p.c.push_back(std::move(v));
        p.trim();
        return p;
    }
    static IntPoly variable() { return IntPoly{0, 1}; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const Int& lc() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    const Int& coeff(size_t k) const {
        static const Int zero = 0;
        return k < c.size() ? c[k] : zero;
    }

    friend bool operator==(const IntPoly& x, const IntPoly& y) { return x.c == y.c; }
    friend bool operator!=(const IntPoly& x, const IntPoly& y) { return !(x == y); }

    friend IntPoly operator-(const IntPoly& x) {
        IntPoly r = x;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend IntPoly operator+(const IntPoly& x, const IntPoly& y) {
        IntPoly r;
        r.c.resize(std::max(x.c.size(), y.c.size()));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.coeff(i) + y.coeff(i);
        r.trim();
        return r;
    }
    friend IntPoly operator-(const IntPoly& x, const IntPoly& y) { return x + (-y); }
    friend IntPoly operator*(const IntPoly& x, const IntPoly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        IntPoly r;
        r.c.assign(x.c.size() + y.c.size() - 1, Int(0));
        for (size_t i = 0; i < x.c.size(); ++i)
            for (size_t j = 0; j < y.c.size(); ++j) r.c[i + j] += x.c[i] * y.c[j];
        r.trim();
        return r;
    }
    friend IntPoly operator*(const IntPoly& x, const Int& k) {
        IntPoly r = x;
        for (auto& v : r.c) v *= k;
        r.trim();
        return r;
    }

    // ring constructors so Mat2<IntPoly> works
    IntPoly(long long v) : IntPoly(std::initializer_list<long long>{v}) {}
};

inline IntPoly derivative(const IntPoly& p) {
    IntPoly r;
    for (size_t i = 1; i < p.c.size(); ++i) r.c.push_back(p.c[i] * Int(i));
    r.trim();
    return r;
}

// gcd of coefficients, nonnegative; 0 for the zero polynomial
inline Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& v : p.c) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

// divides out the content, keeping the sign of the leading coefficient
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (g == 1) return p;
    IntPoly r = p;
    for (auto& v : r.c) v /= g;
    return r;
}

inline BigRational evaluate(const IntPoly& p, const BigRational& x) {
    BigRational acc(Int(0));
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

inline Scalar evaluate(const IntPoly& p, const Scalar& x) {
    Scalar acc(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + Scalar(*it);
    return acc;
}

// exact sign of p(a/b) via the homogenized integer value sum c_i a^i b^(n-i)
inline int sign_at(const IntPoly& p, const BigRational& x) {
    if (p.is_zero()) return 0;
    Int acc = p.c.back();
    Int bpow = 1;
    for (size_t i = p.c.size() - 1; i-- > 0;) {
        bpow *= x.den;
        acc = acc * x.num + p.c[i] * bpow;
    }
    return acc.sign();
}

inline int sign_at_pos_inf(const IntPoly& p) { return p.is_zero() ? 0 : p.lc().sign(); }

inline int sign_at_neg_inf(const IntPoly& p) {
    if (p.is_zero()) return 0;
    int s = p.lc().sign();
    return (p.degree() % 2 == 0) ? s : -s;
}

// classical pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + R
inline IntPoly pseudo_rem(IntPoly f, const IntPoly& g) {
    if (g.is_zero()) throw DivByZero();
    int dg = g.degree();
    int e = f.degree() - dg + 1;
    if (e <= 0) return f;
    const Int& glc = g.lc();
    while (!f.is_zero() && f.degree() >= dg) {
        int k = f.degree() - dg;
        Int flc = f.lc();
        for (auto& v : f.c) v *= glc;
        for (int i = 0; i <= dg; ++i) f.c[i + k] -= flc * g.c[i];
        f.trim();
        --e;
    }
    // pad the multiplier up to lc(g)^(delta+1)
    for (; e > 0; --e)
        for (auto& v : f.c) v *= glc;
    return f;
}

// exact division; throws if g does not divide f over the integers
inline IntPoly divide_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw DivByZero();
    if (f.is_zero()) return {};
    int df = f.degree(), dg = g.degree();
    if (df < dg) throw InternalInconsistency("inexact polynomial division");
    IntPoly rem = f;
    IntPoly q;
    q.c.assign(df - dg + 1, Int(0));
    for (int k = df - dg; k >= 0; --k) {
        if (rem.degree() < dg + k) continue;
        if (rem.c[dg + k] % g.lc() != 0)
            throw InternalInconsistency("inexact polynomial division");
        Int qk = rem.c[dg + k] / g.lc();
        q.c[k] = qk;
        for (int i = 0; i <= dg; ++i) rem.c[i + k] -= qk * g.c[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw InternalInconsistency("inexact polynomial division");
    q.trim();
    return q;
}

// subresultant pseudo-remainder sequence; primitive gcd with positive lc
inline IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) return {};
    if (f.is_zero()) return primitive_part(g).lc() > 0 ? primitive_part(g) : -primitive_part(g);
    if (g.is_zero()) return primitive_part(f).lc() > 0 ? primitive_part(f) : -primitive_part(f);
    IntPoly a = primitive_part(f);
    IntPoly b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    Int gg = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        Int divisor = gg;
        for (int i = 0; i < delta; ++i) divisor *= h;
        a = b;
        b = r;
        for (auto& v : b.c) {
            if (v % divisor != 0) throw InternalInconsistency("subresultant division not exact");
            v /= divisor;
        }
        gg = a.lc();
        if (delta >= 1) {
            Int hp = gg;
            for (int i = 1; i < delta; ++i) hp *= gg;
            for (int i = 1; i < delta; ++i) {
                if (hp % h != 0) throw InternalInconsistency("subresultant h-update not exact");
                hp /= h;
            }
            h = hp;
        }
    }
    IntPoly result = primitive_part(b);
    if (result.lc() < 0) result = -result;
    return result;
}

inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPoly();
    IntPoly pp = primitive_part(p);
    if (pp.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(pp, derivative(pp));
    if (g.degree() == 0) return pp;
    return divide_exact(pp, g);
}

// resultant via fraction-free (Bareiss) elimination of the Sylvester matrix
inline Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    int m = f.degree(), n = g.degree();
    if (m == 0) {
        Int r = 1;
        for (int i = 0; i < n; ++i) r *= f.c[0];
        return r;
    }
    if (n == 0) {
        Int r = 1;
        for (int i = 0; i < m; ++i) r *= g.c[0];
        return r;
    }
    int size = m + n;
    std::vector<std::vector<Int>> mat(size, std::vector<Int>(size, Int(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) mat[row][row + j] = f.c[m - j];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) mat[n + row][row + j] = g.c[n - j];

    int sign = 1;
    Int denom = 1;
    for (int k = 0; k + 1 < size; ++k) {
        if (mat[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < size; ++i)
                if (mat[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(mat[k], mat[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / denom;
            }
            mat[i][k] = 0;
        }
        denom = mat[k][k];
    }
    return sign > 0 ? mat[size - 1][size - 1] : -mat[size - 1][size - 1];
}

// "a_n*x^n + ... + a_0" rendering, descending powers
inline std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& v = p.c[i];
        if (v == 0) continue;
        if (!s.empty()) s += (v > 0) ? " + " : " - ";
        else if (v < 0) s += "-";
        Int av = abs_of(v);
        bool show_coeff = (av != 1) || (i == 0);
        if (show_coeff) s += av.str();
        if (i > 0) {
            if (show_coeff) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace relnum
