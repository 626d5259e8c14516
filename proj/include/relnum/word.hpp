#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "relnum/errors.hpp"
#include "relnum/scalar.hpp"

namespace relnum {

// Generators of the rank-2 free group; x1 evaluates to A, x2 to B_alpha.
enum class Gen : uint8_t { x1 = 0, x2 = 1 };

inline Gen other(Gen g) { return g == Gen::x1 ? Gen::x2 : Gen::x1; }

struct Syllable {
    Gen gen;
    Int exp;  // nonzero

    friend bool operator==(const Syllable& a, const Syllable& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

// Freely reduced word: adjacent syllables use different generators.
class ReducedWord {
public:
    ReducedWord() = default;

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    size_t syllable_count() const { return syl_.size(); }

    // total number of generator applications, sum of |exponent|
    Int generator_length() const {
        Int n = 0;
        for (const auto& s : syl_) n += abs_of(s.exp);
        return n;
    }

    // Appends gen^exp, merging with the tail and cancelling as needed.
    void push(Gen g, Int exp) {
        if (exp == 0) return;
        if (!syl_.empty() && syl_.back().gen == g) {
            syl_.back().exp += exp;
            if (syl_.back().exp == 0) syl_.pop_back();
            return;
        }
        syl_.push_back({g, std::move(exp)});
    }

    friend ReducedWord operator*(const ReducedWord& x, const ReducedWord& y) {
        ReducedWord r = x;
        for (const auto& s : y.syl_) r.push(s.gen, s.exp);
        return r;
    }

    ReducedWord inverse() const {
        ReducedWord r;
        for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.push(it->gen, -it->exp);
        return r;
    }

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
        return a.syl_ == b.syl_;
    }
    friend bool operator!=(const ReducedWord& a, const ReducedWord& b) { return !(a == b); }

private:
    std::vector<Syllable> syl_;
};

// x1 -> x1^-1, x2 -> x2^-1; an involution, preserves reducedness.
inline ReducedWord mirror_word(const ReducedWord& w) {
    ReducedWord r;
    for (const auto& s : w.syllables()) r.push(s.gen, -s.exp);
    return r;
}

// Text form: "A"/"a" for x1/x1^-1, "B"/"b" for x2/x2^-1, optional caret
// exponents ("B^-2 A B^-1 A"); lowercase with ^k means the inverse to the k.
inline std::string to_string(const ReducedWord& w) {
    std::string s;
    for (const auto& syl : w.syllables()) {
        char base = (syl.gen == Gen::x1) ? 'A' : 'B';
        bool inv = syl.exp < 0;
        s += inv ? static_cast<char>(std::tolower(base)) : base;
        Int e = abs_of(syl.exp);
        if (e > 1) s += "^" + e.str();
    }
    return s;
}

inline ReducedWord parse_word(const std::string& s) {
    ReducedWord w;
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        char c = s[i];
        Gen g;
        int unit;
        switch (c) {
            case 'A': g = Gen::x1; unit = 1; break;
            case 'a': g = Gen::x1; unit = -1; break;
            case 'B': g = Gen::x2; unit = 1; break;
            case 'b': g = Gen::x2; unit = -1; break;
            default: throw ParseError(std::string("unexpected character '") + c + "' in word");
        }
        ++i;
        Int exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            int esign = 1;
            if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                if (s[i] == '-') esign = -1;
                ++i;
            }
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) throw ParseError("expected exponent digits in word '" + s + "'");
            exp = Int(s.substr(start, i - start));
            if (exp == 0) throw ParseError("zero exponent in word '" + s + "'");
            exp *= esign;
        }
        w.push(g, exp * unit);
    }
    return w;
}

}  // namespace relnum
