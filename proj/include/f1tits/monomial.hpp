#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace f1tits {

using GenSet = std::uint64_t;  // bitset over generators, bit i = generator i
constexpr int kMaxGenerators = 64;

inline bool has_gen(GenSet s, int i) { return (s >> i) & 1u; }
inline GenSet gen_bit(int i) { return GenSet{1} << i; }
inline int popcount(GenSet s) { return __builtin_popcountll(s); }

// A monomial (-1)^sign * prod T_i^{e_i}, or the zero element.
struct Monomial {
    bool zero = false;
    int sign = 0;
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps(n, 0) {}
    Monomial(int s, std::vector<int> e) : sign(s), exps(std::move(e)) {}

    static Monomial unit(std::size_t n) { return Monomial(n); }
    static Monomial make_zero(std::size_t n) {
        Monomial m(n);
        m.zero = true;
        return m;
    }
    static Monomial var(std::size_t n, int i, int power = 1) {
        Monomial m(n);
        m.exps[i] = power;
        return m;
    }

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_constant() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }
    // generators occurring with nonzero exponent
    GenSet support() const {
        GenSet s = 0;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0) s |= gen_bit(static_cast<int>(i));
        return s;
    }

    bool operator==(const Monomial&) const = default;
};

// graded lexicographic on exponents, sign last; zero sorts first
inline std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.zero != b.zero) return a.zero ? std::strong_ordering::less : std::strong_ordering::greater;
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    if (auto c = std::lexicographical_compare_three_way(a.exps.begin(), a.exps.end(), b.exps.begin(),
                                                        b.exps.end());
        c != 0)
        return c;
    return a.sign <=> b.sign;
}

// coefficient order m in {1,2}: the sign exponent lives in Z/m
inline Monomial multiply(const Monomial& a, const Monomial& b, int m) {
    Monomial r(a.exps.size());
    if (a.zero || b.zero) {
        r.zero = true;
        return r;
    }
    r.sign = (a.sign + b.sign) % m;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
    return r;
}

// Multiset of nonzero monomials; the empty multiset is 0.
struct FormalSum {
    std::vector<Monomial> terms;

    FormalSum() = default;
    explicit FormalSum(std::vector<Monomial> t) : terms(std::move(t)) { normalize(); }

    void normalize() {
        std::erase_if(terms, [](const Monomial& m) { return m.zero; });
        std::sort(terms.begin(), terms.end());
    }
    bool empty() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }

    bool operator==(const FormalSum&) const = default;
    auto operator<=>(const FormalSum& o) const {
        if (terms.size() != o.terms.size()) return terms.size() <=> o.terms.size();
        return std::lexicographical_compare_three_way(terms.begin(), terms.end(), o.terms.begin(),
                                                      o.terms.end());
    }
};

inline FormalSum scale(const FormalSum& s, const Monomial& m, int order) {
    std::vector<Monomial> out;
    out.reserve(s.terms.size());
    for (const auto& t : s.terms) out.push_back(multiply(t, m, order));
    return FormalSum(std::move(out));
}

struct Relation {
    FormalSum lhs, rhs;

    Relation() = default;
    Relation(FormalSum l, FormalSum r) : lhs(std::move(l)), rhs(std::move(r)) { canonicalize(); }

    void canonicalize() {
        lhs.normalize();
        rhs.normalize();
        if (rhs < lhs) std::swap(lhs, rhs);
    }
    bool trivial() const { return lhs == rhs; }
    std::size_t term_count() const { return lhs.size() + rhs.size(); }

    bool operator==(const Relation&) const = default;
    auto operator<=>(const Relation& o) const {
        if (auto c = lhs <=> o.lhs; c != 0) return c;
        return rhs <=> o.rhs;
    }
};

}  // namespace f1tits
