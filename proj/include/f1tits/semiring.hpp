#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "blue_field.hpp"
#include "group_model.hpp"

namespace f1tits {

struct SemiringValue {
    BigInt v = 0;
    bool infinite = false;  // tropical +infinity
    friend bool operator==(const SemiringValue&, const SemiringValue&) = default;
};

class Semiring {
public:
    enum class Kind { naturals, boolean, tropical, modular, integers };

    static Semiring naturals() { return Semiring(Kind::naturals); }
    static Semiring boolean() { return Semiring(Kind::boolean); }
    static Semiring tropical() { return Semiring(Kind::tropical); }
    static Semiring integers() { return Semiring(Kind::integers); }
    static Semiring modular(long long n) {
        if (n < 2) throw InputError("invalid_semiring", "modulus must be at least 2");
        Semiring s(Kind::modular);
        s.modulus_ = n;
        return s;
    }
    static Semiring parse(const std::string& name) {
        if (name == "naturals" || name == "N") return naturals();
        if (name == "B1" || name == "boolean") return boolean();
        if (name == "tropical") return tropical();
        if (name == "integers" || name == "Z") return integers();
        if (name.size() > 1 && name[0] == 'F') return modular(std::stoll(name.substr(1)));
        if (name.rfind("mod:", 0) == 0) return modular(std::stoll(name.substr(4)));
        throw InputError("invalid_semiring", "unknown semiring '" + name + "'");
    }

    Kind kind() const { return kind_; }
    long long modulus() const { return modulus_; }
    std::string name() const {
        switch (kind_) {
            case Kind::naturals: return "naturals";
            case Kind::boolean: return "B1";
            case Kind::tropical: return "tropical";
            case Kind::integers: return "integers";
            case Kind::modular: return "mod:" + std::to_string(modulus_);
        }
        return "";
    }

    SemiringValue zero() const { return kind_ == Kind::tropical ? SemiringValue{0, true} : SemiringValue{0, false}; }
    SemiringValue one() const { return {0 + (kind_ == Kind::tropical ? 0 : 1), false}; }

    SemiringValue add(const SemiringValue& a, const SemiringValue& b) const {
        switch (kind_) {
            case Kind::naturals:
            case Kind::integers: return {a.v + b.v, false};
            case Kind::boolean: return {(a.v != 0 || b.v != 0) ? 1 : 0, false};
            case Kind::modular: return {(a.v + b.v) % modulus_, false};
            case Kind::tropical:
                if (a.infinite) return b;
                if (b.infinite) return a;
                return {a.v < b.v ? a.v : b.v, false};
        }
        return {};
    }
    SemiringValue mul(const SemiringValue& a, const SemiringValue& b) const {
        switch (kind_) {
            case Kind::naturals:
            case Kind::integers: return {a.v * b.v, false};
            case Kind::boolean: return {(a.v != 0 && b.v != 0) ? 1 : 0, false};
            case Kind::modular: return {(a.v * b.v) % modulus_, false};
            case Kind::tropical:
                if (a.infinite || b.infinite) return zero();
                return {a.v + b.v, false};
        }
        return {};
    }
    std::optional<SemiringValue> negative_one() const {
        if (kind_ == Kind::integers) return SemiringValue{-1, false};
        if (kind_ == Kind::modular) return SemiringValue{modulus_ - 1, false};
        return std::nullopt;
    }
    bool is_unit(const SemiringValue& a) const {
        switch (kind_) {
            case Kind::naturals:
            case Kind::boolean: return a.v == 1;
            case Kind::integers: return a.v == 1 || a.v == -1;
            case Kind::tropical: return !a.infinite;
            case Kind::modular: return boost::multiprecision::gcd(a.v, BigInt(modulus_)) == 1;
        }
        return false;
    }
    bool valid(const SemiringValue& a) const {
        switch (kind_) {
            case Kind::naturals: return !a.infinite && a.v >= 0;
            case Kind::boolean: return !a.infinite && (a.v == 0 || a.v == 1);
            case Kind::integers: return !a.infinite;
            case Kind::modular: return !a.infinite && a.v >= 0 && a.v < modulus_;
            case Kind::tropical: return true;
        }
        return false;
    }
    std::optional<std::vector<SemiringValue>> elements() const {
        if (kind_ == Kind::boolean) return std::vector<SemiringValue>{{0, false}, {1, false}};
        if (kind_ == Kind::modular) {
            std::vector<SemiringValue> out;
            for (long long i = 0; i < modulus_; ++i) out.push_back({i, false});
            return out;
        }
        return std::nullopt;
    }
    SemiringValue random(std::mt19937_64& rng, long long bound = 5) const {
        switch (kind_) {
            case Kind::naturals: return {static_cast<long long>(rng() % (bound + 1)), false};
            case Kind::integers: return {static_cast<long long>(rng() % (2 * bound + 1)) - bound, false};
            case Kind::boolean: return {static_cast<long long>(rng() % 2), false};
            case Kind::modular: return {static_cast<long long>(rng() % modulus_), false};
            case Kind::tropical:
                if (rng() % 6 == 0) return zero();
                return {static_cast<long long>(rng() % (2 * bound + 1)) - bound, false};
        }
        return {};
    }
    std::string format(const SemiringValue& a) const { return a.infinite ? "inf" : a.v.str(); }

private:
    explicit Semiring(Kind k) : kind_(k) {}
    Kind kind_;
    long long modulus_ = 0;
};

// Values of all generators of a presentation in a semiring.
using Assignment = std::vector<SemiringValue>;

inline SemiringValue evaluate(const Semiring& S, const Monomial& m, const Assignment& x) {
    if (m.zero) return S.zero();
    SemiringValue r = S.one();
    if (m.sign) {
        auto neg = S.negative_one();
        if (!neg) throw unsupported("relation with -1 cannot be evaluated in " + S.name());
        r = *neg;
    }
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        int e = m.exps[i];
        if (e < 0) throw unsupported("negative exponents are not evaluated in semirings");
        for (int k = 0; k < e; ++k) r = S.mul(r, x[i]);
    }
    return r;
}

inline SemiringValue evaluate(const Semiring& S, const FormalSum& s, const Assignment& x) {
    SemiringValue r = S.zero();
    for (const auto& t : s.terms) r = S.add(r, evaluate(S, t, x));
    return r;
}

inline bool satisfies(const BlueprintPresentation& b, const Semiring& S, const Assignment& x) {
    if (x.size() != b.size()) throw InputError("invalid_point", "assignment has the wrong number of generators");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!S.valid(x[i])) return false;
        if (has_gen(b.inverted, static_cast<int>(i)) && !S.is_unit(x[i])) return false;
    }
    for (const auto& r : b.relations)
        if (!(evaluate(S, r.lhs, x) == evaluate(S, r.rhs, x))) return false;
    return true;
}

// Row-major matrix of a matrix model's point plus the values of auxiliary
// generators (d), in generator order.
struct PointMatrix {
    std::size_t dim = 0;
    std::vector<SemiringValue> entries;
    std::vector<SemiringValue> aux;
};

inline Assignment to_assignment(const GroupModel& g, const PointMatrix& M, const Semiring& S) {
    if (g.dim == 0) throw unsupported("model " + g.name + " is not a matrix model");
    if (M.dim != g.dim || M.entries.size() != g.dim * g.dim)
        throw InputError("invalid_point", "matrix dimension does not match model " + g.name);
    if (M.aux.size() != g.aux_generators.size())
        throw InputError("missing_auxiliary", "model " + g.name + " expects " + std::to_string(g.aux_generators.size()) +
                                                  " auxiliary value(s) (d)");
    Assignment x(g.presentation.size(), S.zero());
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j)
            if (int idx = g.entry_generator[i][j]; idx >= 0) x[idx] = M.entries[i * g.dim + j];
    for (std::size_t k = 0; k < g.aux_generators.size(); ++k) x[g.aux_generators[k]] = M.aux[k];
    return x;
}

inline bool is_point(const GroupModel& g, const PointMatrix& M, const Semiring& S) {
    Assignment x = to_assignment(g, M, S);
    // entries without a generator are fixed: 1 on the diagonal, 0 elsewhere
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j)
            if (g.entry_generator[i][j] < 0 && !(M.entries[i * g.dim + j] == (i == j ? S.one() : S.zero())))
                return false;
    return satisfies(g.presentation, S, x);
}

// The law on points: x_k = sum over terms of Delta(T_k) of left(x) * right(y).
inline Assignment multiply(const Comultiplication& delta, const Assignment& x, const Assignment& y, const Semiring& S) {
    Assignment out(delta.images.size(), S.zero());
    for (std::size_t k = 0; k < delta.images.size(); ++k) {
        SemiringValue acc = S.zero();
        for (const auto& t : delta.images[k]) {
            SemiringValue v = S.one();
            if (t.sign) {
                auto neg = S.negative_one();
                if (!neg) throw unsupported("comultiplication with -1 cannot be evaluated in " + S.name());
                v = *neg;
            }
            for (std::size_t i = 0; i < t.left.size(); ++i)
                for (int e = 0; e < t.left[i]; ++e) v = S.mul(v, x[i]);
            for (std::size_t i = 0; i < t.right.size(); ++i)
                for (int e = 0; e < t.right[i]; ++e) v = S.mul(v, y[i]);
            acc = S.add(acc, v);
        }
        out[k] = acc;
    }
    return out;
}

inline PointMatrix multiply(const GroupModel& g, const PointMatrix& M, const PointMatrix& N, const Semiring& S) {
    Assignment z = multiply(g.comult, to_assignment(g, M, S), to_assignment(g, N, S), S);
    PointMatrix P;
    P.dim = g.dim;
    P.entries.assign(g.dim * g.dim, S.zero());
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j) {
            int idx = g.entry_generator[i][j];
            P.entries[i * g.dim + j] = idx >= 0 ? z[idx] : (i == j ? S.one() : S.zero());
        }
    for (int a : g.aux_generators) P.aux.push_back(z[a]);
    return P;
}

inline PointMatrix identity_point(const GroupModel& g, const Semiring& S) {
    PointMatrix P;
    P.dim = g.dim;
    P.entries.assign(g.dim * g.dim, S.zero());
    for (std::size_t i = 0; i < g.dim; ++i) P.entries[i * g.dim + i] = S.one();
    P.aux.assign(g.aux_generators.size(), S.one());
    return P;
}

constexpr std::size_t kHomCountLimit = 1u << 24;

// Exhaustive count of assignments of all generators satisfying the relations.
inline std::size_t hom_count(const BlueprintPresentation& b, const Semiring& S) {
    auto el = S.elements();
    if (!el) throw unsupported("hom_count needs a finite semiring, got " + S.name());
    const std::size_t q = el->size(), n = b.size();
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(q);
    if (total > kHomCountLimit) throw cap_exceeded("hom_count search space exceeds 2^24 assignments");
    std::vector<std::size_t> digit(n, 0);
    Assignment x(n, (*el)[0]);
    std::size_t count = 0;
    for (std::size_t step = 0; step < static_cast<std::size_t>(total); ++step) {
        if (satisfies(b, S, x)) ++count;
        for (std::size_t i = 0; i < n; ++i) {
            if (++digit[i] < q) {
                x[i] = (*el)[digit[i]];
                break;
            }
            digit[i] = 0;
            x[i] = (*el)[0];
        }
    }
    return count;
}

inline std::size_t hom_count(const GroupModel& g, const Semiring& S) { return hom_count(g.presentation, S); }

// Morphisms B -> F1 = {0, 1}: a relation holds iff both sides have the same
// number of nonzero terms, since F1 identifies no distinct formal sums.
inline std::vector<GenSet> f1_points(const BlueprintPresentation& b) {
    if (b.size() > 24) throw cap_exceeded("f1_points scans at most 2^24 assignments");
    std::vector<GenSet> out;
    if (b.coeff_order == 2) return out;
    for (GenSet ones = 0; ones < (GenSet{1} << b.size()); ++ones) {
        if ((b.inverted & ~ones) != 0) continue;
        auto nonzero = [&](const FormalSum& s) {
            std::size_t c = 0;
            for (const auto& t : s.terms) {
                if (t.zero || t.sign) continue;
                if ((t.support() & ~ones) == 0) ++c;
            }
            return c;
        };
        bool ok = true;
        for (const auto& r : b.relations)
            if (nonzero(r.lhs) != nonzero(r.rhs)) ok = false;
        if (ok) out.push_back(ones);
    }
    return out;
}

// Random points of a matrix model: products of random elementary matrices
// (and, failing that, sparse random matrices), kept only when they satisfy
// the relations.
inline std::vector<PointMatrix> sample_points(const GroupModel& g, const Semiring& S, std::size_t count,
                                              std::mt19937_64& rng, std::size_t max_tries = 20000) {
    std::vector<PointMatrix> out;
    const std::size_t n = g.dim;
    auto elementary = [&]() {
        PointMatrix E = identity_point(g, S);
        std::size_t i = rng() % n, j = rng() % n;
        if (i != j && g.entry_generator[i][j] >= 0) E.entries[i * n + j] = S.random(rng);
        return E;
    };
    for (std::size_t tries = 0; tries < max_tries && out.size() < count; ++tries) {
        PointMatrix M;
        if (tries % 2 == 0) {
            M = identity_point(g, S);
            std::size_t factors = 1 + rng() % 4;
            for (std::size_t k = 0; k < factors; ++k) {
                PointMatrix E = elementary();
                if (!is_point(g, E, S)) break;
                M = multiply(g, M, E, S);
            }
        } else {
            M.dim = n;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (g.entry_generator[i][j] >= 0)
                        M.entries.push_back(rng() % 3 == 0 ? S.random(rng) : (rng() % 2 ? S.zero() : S.one()));
                    else
                        M.entries.push_back(i == j ? S.one() : S.zero());
                }
            M.aux.assign(g.aux_generators.size(), S.one());
        }
        if (is_point(g, M, S)) out.push_back(std::move(M));
    }
    return out;
}

}  // namespace f1tits
