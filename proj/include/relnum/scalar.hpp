#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "relnum/errors.hpp"

namespace relnum {

using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& x) { return x.sign(); }

inline Int abs_of(const Int& x) { return boost::multiprecision::abs(x); }

inline Int pow10(unsigned k) {
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

// ---------------------------------------------------------------------------
// BigRational: reduced fraction, den > 0, zero is 0/1.
// ---------------------------------------------------------------------------

struct BigRational {
    Int num{0};
    Int den{1};

    BigRational() = default;
    BigRational(Int n) : num(std::move(n)), den(1) {}
    BigRational(long long n) : num(n), den(1) {}
    BigRational(Int n, Int d) { assign(std::move(n), std::move(d)); }

    void assign(Int n, Int d) {
        if (d == 0) throw ZeroDenominator();
        if (d < 0) { n = -n; d = -d; }
        Int g = boost::multiprecision::gcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        num = std::move(n);
        den = std::move(d);
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    int sign() const { return num.sign(); }

    friend bool operator==(const BigRational& x, const BigRational& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const BigRational& x, const BigRational& y) { return !(x == y); }
    friend bool operator<(const BigRational& x, const BigRational& y) {
        return x.num * y.den < y.num * x.den;
    }
    friend bool operator<=(const BigRational& x, const BigRational& y) { return !(y < x); }
    friend bool operator>(const BigRational& x, const BigRational& y) { return y < x; }
    friend bool operator>=(const BigRational& x, const BigRational& y) { return !(x < y); }

    friend BigRational operator-(const BigRational& x) {
        BigRational r;
        r.num = -x.num;
        r.den = x.den;
        return r;
    }
    friend BigRational operator+(const BigRational& x, const BigRational& y) {
        return BigRational(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    friend BigRational operator-(const BigRational& x, const BigRational& y) {
        return BigRational(x.num * y.den - y.num * x.den, x.den * y.den);
    }
    friend BigRational operator*(const BigRational& x, const BigRational& y) {
        return BigRational(x.num * y.num, x.den * y.den);
    }
    friend BigRational operator/(const BigRational& x, const BigRational& y) {
        if (y.is_zero()) throw DivByZero();
        return BigRational(x.num * y.den, x.den * y.num);
    }
};

// The spec-level constructor: unique canonical representative, sign in the numerator.
inline BigRational normalize(Int num, Int den) { return BigRational(std::move(num), std::move(den)); }

inline BigRational rational_abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

// ---------------------------------------------------------------------------
// QuadRational: a + b*sqrt(d) with d squarefree, d >= 2, b != 0.
// Values with b = 0 or square d live in BigRational instead; Scalar enforces that.
// ---------------------------------------------------------------------------

struct QuadRational {
    BigRational a;
    BigRational b;
    Int d{2};

    friend bool operator==(const QuadRational& x, const QuadRational& y) {
        return x.d == y.d && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadRational& x, const QuadRational& y) { return !(x == y); }
};

// Splits n = s^2 * f with f squarefree; returns {s, f}. Trial division.
inline std::pair<Int, Int> extract_square_part(Int n) {
    Int s = 1, f = 1;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) f *= p;
    }
    f *= n;  // leftover prime factor
    return {s, f};
}

// exact sign of a + b*sqrt(d), by case analysis and comparison of a^2 with d*b^2
inline int quad_sign(const BigRational& a, const BigRational& b, const Int& d) {
    int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against d*b^2 (cross-multiplied, exact)
    Int lhs = a.num * a.num * b.den * b.den;
    Int rhs = d * b.num * b.num * a.den * a.den;
    if (lhs == rhs) throw InternalInconsistency("sqrt(d) rational for squarefree d >= 2");
    return (lhs > rhs) ? sa : sb;
}

// ---------------------------------------------------------------------------
// Scalar: exact element of Q or of one real quadratic field Q(sqrt(d)).
// Canonical: quadratic values with zero irrational part demote to BigRational,
// so variant equality is value equality.
// ---------------------------------------------------------------------------

class Scalar {
public:
    Scalar() : v_(BigRational{}) {}
    Scalar(BigRational r) : v_(std::move(r)) {}
    Scalar(Int n) : v_(BigRational(std::move(n))) {}
    Scalar(long long n) : v_(BigRational(n)) {}

    // a + b*sqrt(d); canonicalizes the radicand and demotes rational values.
    static Scalar quadratic(BigRational a, BigRational b, Int d) {
        if (d <= 0) throw FieldMismatch("radicand must be positive");
        if (b.is_zero()) return Scalar(std::move(a));
        auto [s, f] = extract_square_part(std::move(d));
        if (f == 1) return Scalar(a + b * BigRational(s));
        QuadRational q;
        q.a = std::move(a);
        q.b = b * BigRational(s);
        q.d = std::move(f);
        return Scalar(std::move(q));
    }

    bool is_rational() const { return std::holds_alternative<BigRational>(v_); }
    const BigRational& rat() const { return std::get<BigRational>(v_); }
    const QuadRational& quad() const { return std::get<QuadRational>(v_); }

    bool is_zero() const { return is_rational() && rat().is_zero(); }

    int sign() const {
        if (is_rational()) return rat().sign();
        const auto& q = quad();
        return quad_sign(q.a, q.b, q.d);
    }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    friend Scalar operator-(const Scalar& x) {
        if (x.is_rational()) return Scalar(-x.rat());
        QuadRational q;
        q.a = -x.quad().a;
        q.b = -x.quad().b;
        q.d = x.quad().d;
        return Scalar(std::move(q));
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        return combine(x, y, /*sub=*/false);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        return combine(x, y, /*sub=*/true);
    }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        if (x.is_rational() && y.is_rational()) return Scalar(x.rat() * y.rat());
        if (x.is_rational()) return y * x;
        const auto& p = x.quad();
        if (y.is_rational()) {
            return Scalar::quadratic(p.a * y.rat(), p.b * y.rat(), p.d);
        }
        const auto& q = y.quad();
        if (p.d != q.d) throw FieldMismatch("distinct radicands in product");
        // (a1 + b1 r)(a2 + b2 r) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) r
        BigRational a = p.a * q.a + BigRational(p.d) * p.b * q.b;
        BigRational b = p.a * q.b + q.a * p.b;
        return Scalar::quadratic(std::move(a), std::move(b), p.d);
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        if (y.is_zero()) throw DivByZero();
        if (y.is_rational()) {
            if (x.is_rational()) return Scalar(x.rat() / y.rat());
            const auto& p = x.quad();
            return Scalar::quadratic(p.a / y.rat(), p.b / y.rat(), p.d);
        }
        // multiply by the conjugate; norm a^2 - d b^2 is nonzero since sqrt(d) is irrational
        const auto& q = y.quad();
        BigRational norm = q.a * q.a - BigRational(q.d) * q.b * q.b;
        Scalar conj = Scalar::quadratic(q.a, -q.b, q.d);
        return (x * conj) * Scalar(BigRational(Int(1)) / norm);
    }

    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return y <= x; }

private:
    static Scalar combine(const Scalar& x, const Scalar& y, bool sub) {
        if (x.is_rational() && y.is_rational())
            return Scalar(sub ? x.rat() - y.rat() : x.rat() + y.rat());
        if (x.is_rational()) {
            const auto& q = y.quad();
            return Scalar::quadratic(sub ? x.rat() - q.a : x.rat() + q.a,
                                     sub ? -q.b : q.b, q.d);
        }
        const auto& p = x.quad();
        if (y.is_rational())
            return Scalar::quadratic(sub ? p.a - y.rat() : p.a + y.rat(), p.b, p.d);
        const auto& q = y.quad();
        if (p.d != q.d) throw FieldMismatch("distinct radicands in sum");
        return Scalar::quadratic(sub ? p.a - q.a : p.a + q.a,
                                 sub ? p.b - q.b : p.b + q.b, p.d);
    }

    std::variant<BigRational, QuadRational> v_;
};

inline int exact_sign(const Scalar& x) { return x.sign(); }

inline Scalar scalar_abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

// Returns n iff x = (2n+1)/2 exactly.
inline std::optional<Int> half_odd_integer(const Scalar& x) {
    if (!x.is_rational()) return std::nullopt;
    const auto& r = x.rat();
    if (r.den != 2) return std::nullopt;
    return (r.num - 1) / 2;
}

// ---------------------------------------------------------------------------
// Conversions and text form
// ---------------------------------------------------------------------------

inline double to_double(const BigRational& r) {
    return r.num.convert_to<double>() / r.den.convert_to<double>();
}

inline double to_double(const Scalar& x) {
    if (x.is_rational()) return to_double(x.rat());
    const auto& q = x.quad();
    return to_double(q.a) + to_double(q.b) * std::sqrt(q.d.convert_to<double>());
}

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const BigRational& r) {
    if (r.den == 1) return r.num.str();
    return r.num.str() + "/" + r.den.str();
}

inline std::string to_string(const Scalar& x) {
    if (x.is_rational()) return to_string(x.rat());
    const auto& q = x.quad();
    std::string s;
    bool need_sign = false;
    if (!q.a.is_zero()) {
        s += to_string(q.a);
        need_sign = true;
    }
    BigRational babs = rational_abs(q.b);
    if (need_sign) s += (q.b.sign() < 0 ? "-" : "+");
    else if (q.b.sign() < 0) s += "-";
    s += to_string(babs) + "*sqrt(" + q.d.str() + ")";
    return s;
}

// Decimal rendering, display only: round-half-up to `digits` significant digits.
inline std::string decimal_string(const BigRational& r, unsigned digits = 30) {
    if (r.is_zero()) return "0";
    Int p = abs_of(r.num);
    const Int& q = r.den;
    std::string sign = r.num < 0 ? "-" : "";
    Int ip = p / q;
    if (ip > 0) {
        std::string istr = ip.str();
        unsigned frac = istr.size() >= digits ? 0 : digits - static_cast<unsigned>(istr.size());
        Int scaled = (2 * p * pow10(frac) + q) / (2 * q);  // round half up
        std::string s = scaled.str();
        if (frac == 0) return sign + s;
        if (s.size() <= frac) s.insert(0, frac + 1 - s.size(), '0');
        s.insert(s.size() - frac, ".");
        return sign + s;
    }
    // |value| < 1: find leading zeros after the point
    unsigned lead = 0;
    Int t = p * 10;
    while (t < q) { t *= 10; ++lead; }
    unsigned frac = lead + digits;
    Int scaled = (2 * p * pow10(frac) + q) / (2 * q);
    std::string s = scaled.str();
    if (s.size() < frac) s.insert(0, frac - s.size(), '0');
    s.insert(0, "0.");
    return sign + s;
}

inline std::string decimal_string(const Scalar& x, unsigned digits = 30) {
    if (x.is_rational()) return decimal_string(x.rat(), digits);
    const auto& qv = x.quad();
    // rational approximation of sqrt(d) with `digits`+10 guard digits
    unsigned m = digits + 10;
    Int scale = pow10(m);
    Int s = boost::multiprecision::sqrt(qv.d * scale * scale);
    BigRational approx = qv.a + qv.b * BigRational(s, scale);
    return decimal_string(approx, digits);
}

// Parser for the scalar text form: "p/q", "a/b+c/e*sqrt(d)", integer shorthand,
// bare "sqrt(d)" terms.
namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline Int parse_uint(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected digits in '" + s + "'");
    return Int(s.substr(start, i - start));
}

inline BigRational parse_unsigned_rational(const std::string& s, size_t& i) {
    Int n = parse_uint(s, i);
    skip_ws(s, i);
    if (i < s.size() && s[i] == '/') {
        ++i;
        Int d = parse_uint(s, i);
        return BigRational(std::move(n), std::move(d));
    }
    return BigRational(std::move(n));
}

// term := rational | rational '*' sqrt '(' uint ')' | sqrt '(' uint ')'
inline Scalar parse_term(const std::string& s, size_t& i, int sign) {
    skip_ws(s, i);
    BigRational coeff(Int(1));
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coeff = parse_unsigned_rational(s, i);
        have_coeff = true;
        skip_ws(s, i);
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws(s, i);
        } else if (s.compare(i, 4, "sqrt") != 0) {
            if (sign < 0) coeff = -coeff;
            return Scalar(std::move(coeff));
        }
    }
    if (s.compare(i, 4, "sqrt") == 0) {
        i += 4;
        skip_ws(s, i);
        if (i >= s.size() || s[i] != '(') throw ParseError("expected '(' after sqrt");
        ++i;
        Int d = parse_uint(s, i);
        skip_ws(s, i);
        if (i >= s.size() || s[i] != ')') throw ParseError("expected ')' in sqrt");
        ++i;
        if (sign < 0) coeff = -coeff;
        return Scalar::quadratic(BigRational(), std::move(coeff), std::move(d));
    }
    if (!have_coeff) throw ParseError("expected number in '" + s + "'");
    if (sign < 0) coeff = -coeff;
    return Scalar(std::move(coeff));
}

}  // namespace detail

inline Scalar parse_scalar(const std::string& s) {
    size_t i = 0;
    detail::skip_ws(s, i);
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    Scalar result = detail::parse_term(s, i, sign);
    detail::skip_ws(s, i);
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        int tsign = (s[i] == '-') ? -1 : 1;
        ++i;
        result = result + detail::parse_term(s, i, tsign);
        detail::skip_ws(s, i);
    }
    if (i != s.size()) throw ParseError("trailing characters in scalar '" + s + "'");
    return result;
}

inline std::size_t hash_value(const BigRational& r) {
    std::size_t seed = 0;
    boost::hash_combine(seed, r.num);
    boost::hash_combine(seed, r.den);
    return seed;
}

inline std::size_t hash_value(const Scalar& x) {
    if (x.is_rational()) return hash_value(x.rat());
    std::size_t seed = hash_value(x.quad().a);
    boost::hash_combine(seed, hash_value(x.quad().b));
    boost::hash_combine(seed, x.quad().d);
    return seed;
}

}  // namespace relnum
