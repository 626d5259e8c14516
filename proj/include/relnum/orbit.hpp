#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "relnum/errors.hpp"
#include "relnum/matrix.hpp"
#include "relnum/scalar.hpp"
#include "relnum/word.hpp"

namespace relnum {

struct SearchBudget {
    long long max_depth = 14;       // generator applications
    int max_height_bits = 256;      // bit-size cap on the integers of a visited point

    SearchBudget() = default;
    SearchBudget(long long depth, int height_bits)
        : max_depth(depth), max_height_bits(height_bits) {
        if (depth <= 0 || height_bits <= 0) throw Error("search budget must be positive");
    }
};

// A word and basepoint whose exact evaluation lands on a half-odd integer,
// certifying that alpha is a relation number.
struct Witness {
    Scalar alpha;
    ProjPoint basepoint;
    ReducedWord word;
    Scalar value;
    Int half_index;  // value == (2*half_index + 1) / 2
    long long depth = 0;
};

// exact re-evaluation through the general matrix path, independent of the search
inline bool verify_witness(const Witness& w) {
    try {
        ScalarMat2 m = evaluate_word(w.word, w.alpha);
        ProjPoint image = moebius_apply(m, w.basepoint);
        if (image.is_infinite()) return false;
        if (image.value() != w.value) return false;
        auto h = half_odd_integer(image.value());
        return h.has_value() && *h == w.half_index;
    } catch (const Error&) {
        return false;
    }
}

namespace detail {

inline int bit_size(const Int& x) {
    if (x == 0) return 0;
    return static_cast<int>(boost::multiprecision::msb(abs_of(x))) + 1;
}

// generator application order A, A^-1, B, B^-1
enum : int8_t { kGenA = 0, kGenAInv = 1, kGenB = 2, kGenBInv = 3 };

inline Gen gen_of(int8_t g) { return g < 2 ? Gen::x1 : Gen::x2; }
inline int gen_unit(int8_t g) { return (g % 2 == 0) ? 1 : -1; }

inline BigRational reduced(Int n, Int d) {
    BigRational r;
    r.num = std::move(n);
    r.den = std::move(d);
    return r;
}

// closed-form actions on R u {inf} for rational alpha = p/q:
// A(x) = x + 1 and B(x) = x / (alpha x + 1)
struct RationalOrbitPolicy {
    Int p, q;
    int max_bits;

    struct Point {
        BigRational v;
        bool inf = false;
    };

    Point apply(int8_t g, const Point& x) const {
        switch (g) {
            case kGenA:
                if (x.inf) return x;
                return {reduced(x.v.num + x.v.den, x.v.den), false};
            case kGenAInv:
                if (x.inf) return x;
                return {reduced(x.v.num - x.v.den, x.v.den), false};
            case kGenB: {
                if (x.inf) return {reduced(q, p), false};
                Int den = p * x.v.num + q * x.v.den;
                if (den == 0) return {BigRational(), true};
                return {BigRational(q * x.v.num, std::move(den)), false};
            }
            default: {
                if (x.inf) return {reduced(-q, p), false};
                Int den = q * x.v.den - p * x.v.num;
                if (den == 0) return {BigRational(), true};
                return {BigRational(q * x.v.num, std::move(den)), false};
            }
        }
    }

    bool height_ok(const Point& x) const {
        if (x.inf) return true;
        return bit_size(x.v.num) <= max_bits && bit_size(x.v.den) <= max_bits;
    }

    static std::optional<Int> half_odd(const Point& x) {
        if (x.inf || x.v.den != 2) return std::nullopt;
        return (x.v.num - 1) / 2;
    }

    static Scalar to_scalar(const Point& x) { return Scalar(x.v); }

    static bool equal(const Point& a, const Point& b) {
        if (a.inf != b.inf) return false;
        return a.inf || a.v == b.v;
    }

    static std::size_t hash(const Point& a) {
        if (a.inf) return 0x9e3779b97f4a7c15ull;
        return hash_value(a.v);
    }
};

// generic field version for quadratic alpha
struct ScalarOrbitPolicy {
    Scalar alpha;
    int max_bits;

    struct Point {
        Scalar v;
        bool inf = false;
    };

    Point apply(int8_t g, const Point& x) const {
        switch (g) {
            case kGenA:
                if (x.inf) return x;
                return {x.v + Scalar(1), false};
            case kGenAInv:
                if (x.inf) return x;
                return {x.v - Scalar(1), false};
            case kGenB: {
                if (x.inf) return {Scalar(1) / alpha, false};
                Scalar den = alpha * x.v + Scalar(1);
                if (den.is_zero()) return {Scalar(0), true};
                return {x.v / den, false};
            }
            default: {
                if (x.inf) return {Scalar(-1) / alpha, false};
                Scalar den = Scalar(1) - alpha * x.v;
                if (den.is_zero()) return {Scalar(0), true};
                return {x.v / den, false};
            }
        }
    }

    bool height_ok(const Point& x) const {
        if (x.inf) return true;
        if (x.v.is_rational())
            return bit_size(x.v.rat().num) <= max_bits && bit_size(x.v.rat().den) <= max_bits;
        const auto& qv = x.v.quad();
        return bit_size(qv.a.num) <= max_bits && bit_size(qv.a.den) <= max_bits &&
               bit_size(qv.b.num) <= max_bits && bit_size(qv.b.den) <= max_bits;
    }

    static std::optional<Int> half_odd(const Point& x) {
        if (x.inf) return std::nullopt;
        return half_odd_integer(x.v);
    }

    static Scalar to_scalar(const Point& x) { return x.v; }

    static bool equal(const Point& a, const Point& b) {
        if (a.inf != b.inf) return false;
        return a.inf || a.v == b.v;
    }

    static std::size_t hash(const Point& a) {
        if (a.inf) return 0x9e3779b97f4a7c15ull;
        return hash_value(a.v);
    }
};

template <class Policy>
std::optional<Witness> orbit_bfs_impl(const Scalar& alpha, const SearchBudget& budget,
                                      const Policy& policy) {
    using Point = typename Policy::Point;
    struct Node {
        Point pt;
        uint32_t parent;
        int8_t gen;
        uint8_t base;  // 0: orbit of 0, 1: orbit of infinity
    };
    std::vector<Node> nodes;

    struct Hash {
        const std::vector<Node>* nodes;
        std::size_t operator()(uint32_t i) const {
            std::size_t seed = Policy::hash((*nodes)[i].pt);
            boost::hash_combine(seed, (*nodes)[i].base);
            return seed;
        }
    };
    struct Eq {
        const std::vector<Node>* nodes;
        bool operator()(uint32_t i, uint32_t j) const {
            const Node& a = (*nodes)[i];
            const Node& b = (*nodes)[j];
            return a.base == b.base && Policy::equal(a.pt, b.pt);
        }
    };
    std::unordered_set<uint32_t, Hash, Eq> visited(64, Hash{&nodes}, Eq{&nodes});

    auto make_witness = [&](const Point& pt, int8_t g, uint32_t parent, long long depth) {
        Witness w;
        w.alpha = alpha;
        w.word.push(gen_of(g), gen_unit(g));
        for (uint32_t i = parent; nodes[i].gen >= 0; i = nodes[i].parent)
            w.word.push(gen_of(nodes[i].gen), gen_unit(nodes[i].gen));
        w.basepoint = nodes[parent].base == 0 ? ProjPoint::zero() : ProjPoint::infinity();
        w.value = Policy::to_scalar(pt);
        w.half_index = *Policy::half_odd(pt);
        w.depth = depth;
        return w;
    };

    // roots: basepoint 0 before infinity; neither is half-odd
    nodes.push_back({Point{{}, false}, 0, -1, 0});
    visited.insert(0);
    nodes.push_back({Point{{}, true}, 0, -1, 1});
    visited.insert(1);

    size_t level_begin = 0, level_end = nodes.size();
    for (long long depth = 1; depth <= budget.max_depth && level_begin < level_end; ++depth) {
        for (size_t i = level_begin; i < level_end; ++i) {
            for (int8_t g = 0; g < 4; ++g) {
                Point child = policy.apply(g, nodes[i].pt);
                if (Policy::half_odd(child))
                    return make_witness(child, g, static_cast<uint32_t>(i), depth);
                if (!policy.height_ok(child)) continue;
                uint32_t idx = static_cast<uint32_t>(nodes.size());
                nodes.push_back({std::move(child), static_cast<uint32_t>(i), g, nodes[i].base});
                if (!visited.insert(idx).second) nodes.pop_back();
            }
        }
        level_begin = level_end;
        level_end = nodes.size();
    }
    return std::nullopt;  // inconclusive
}

}  // namespace detail

// The orbit test: breadth-first search of the orbits of 0 and infinity for a
// half-odd-integer value. A witness certifies a relation number; an empty
// result is inconclusive. Deterministic: shortest generator length first, then
// the fixed application order A, A^-1, B, B^-1.
inline std::optional<Witness> orbit_bfs(Scalar alpha, const SearchBudget& budget = {}) {
    if (alpha.is_zero()) throw DegenerateAlpha();
    if (exact_sign(alpha) < 0) alpha = -alpha;
    if (alpha.is_rational()) {
        detail::RationalOrbitPolicy policy{alpha.rat().num, alpha.rat().den,
                                           budget.max_height_bits};
        return detail::orbit_bfs_impl(alpha, budget, policy);
    }
    detail::ScalarOrbitPolicy policy{alpha, budget.max_height_bits};
    return detail::orbit_bfs_impl(alpha, budget, policy);
}

// Closed-form witnesses for the families alpha = 1/n, 2/n, 3/n:
//   B^(2n)(inf) = 1/2,  B(inf) = n/2 (n odd),  B^n A^-1 (0) = 1/2
inline Witness standard_families(int m, const Int& n) {
    if (n == 0) throw DegenerateAlpha();
    Int k = abs_of(n);  // alpha and -alpha generate the same group
    Witness w;
    switch (m) {
        case 1:
            w.alpha = Scalar(BigRational(Int(1), k));
            w.basepoint = ProjPoint::infinity();
            w.word.push(Gen::x2, 2 * k);
            w.value = Scalar(BigRational(Int(1), Int(2)));
            w.half_index = 0;
            w.depth = (2 * k).convert_to<long long>();
            break;
        case 2:
            if (k % 2 == 0) throw NotHalfOdd("alpha = 2/n needs odd n");
            w.alpha = Scalar(BigRational(Int(2), k));
            w.basepoint = ProjPoint::infinity();
            w.word.push(Gen::x2, 1);
            w.value = Scalar(BigRational(k, Int(2)));
            w.half_index = (k - 1) / 2;
            w.depth = 1;
            break;
        case 3:
            w.alpha = Scalar(BigRational(Int(3), k));
            w.basepoint = ProjPoint::zero();
            w.word.push(Gen::x2, k);
            w.word.push(Gen::x1, -1);
            w.value = Scalar(BigRational(Int(1), Int(2)));
            w.half_index = 0;
            w.depth = k.convert_to<long long>() + 1;
            break;
        default:
            throw Error("standard_families needs m in {1, 2, 3}");
    }
    if (!verify_witness(w)) throw InternalInconsistency("family witness failed verification");
    return w;
}

// ---------------------------------------------------------------------------
// Replay of the bundled table of rational relation numbers
// ---------------------------------------------------------------------------

struct TableRow {
    std::string alpha;
    std::string word;
    std::string basepoint;
    std::string value;
};

struct TableCheck {
    TableRow row;
    std::string computed;
    bool pass = false;
};

struct TableReport {
    std::vector<TableCheck> checks;
    bool all_pass = true;
};

inline TableReport verify_table(const std::vector<TableRow>& rows) {
    TableReport report;
    for (const auto& row : rows) {
        TableCheck check;
        check.row = row;
        Scalar alpha = parse_scalar(row.alpha);
        ReducedWord word = parse_word(row.word);
        ProjPoint base = parse_proj_point(row.basepoint);
        Scalar expected = parse_scalar(row.value);
        ProjPoint image = moebius_apply(evaluate_word(word, alpha), base);
        if (image.is_infinite()) {
            check.computed = "inf";
            check.pass = false;
        } else {
            check.computed = to_string(image.value());
            check.pass = image.value() == expected &&
                         half_odd_integer(image.value()).has_value();
        }
        report.all_pass = report.all_pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace relnum
