#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "blue_field.hpp"
#include "presentation.hpp"

namespace f1tits {

// The prime ideal p_I generated by the generators in `vars`.
struct PrimePoint {
    GenSet vars = 0;
    bool operator==(const PrimePoint&) const = default;
};

// '1' at position i iff generator i lies in the ideal
inline std::string bitset_string(GenSet s, std::size_t n) {
    std::string out(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if (has_gen(s, static_cast<int>(i))) out[i] = '1';
    return out;
}

inline GenSet parse_bitset(const std::string& s) {
    GenSet g = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') g |= gen_bit(static_cast<int>(i));
        else if (s[i] != '0') throw InputError("invalid_bitset", "bitset must consist of 0 and 1");
    }
    return g;
}

// lexicographic order on bitset strings (generator 1 first)
inline bool bitset_less(GenSet a, GenSet b) {
    if (a == b) return false;
    GenSet diff = a ^ b;
    int low = __builtin_ctzll(diff);
    return has_gen(b, low);
}

struct SpectrumOptions {
    std::size_t cap = 26;
    unsigned threads = 0;  // 0: F1TITS_THREADS or hardware concurrency
};

inline unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("F1TITS_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace detail {

// Relations flattened to term supports for fast prime tests.
struct CompiledRelations {
    std::vector<std::vector<GenSet>> terms;
    GenSet inverted = 0;
    std::size_t n = 0;

    explicit CompiledRelations(const BlueprintPresentation& b) : inverted(b.inverted), n(b.size()) {
        for (const auto& r : b.relations) {
            std::vector<GenSet> t;
            for (const auto& m : r.lhs.terms) t.push_back(m.support() & ~b.inverted);
            for (const auto& m : r.rhs.terms) t.push_back(m.support() & ~b.inverted);
            terms.push_back(std::move(t));
        }
    }

    // every relation has 0 or >= 2 terms outside the ideal generated by I
    bool criterion(GenSet I) const {
        for (const auto& rel : terms) {
            int outside = 0;
            for (GenSet t : rel)
                if (!(t & I)) ++outside;
            if (outside == 1) return false;
        }
        return true;
    }
};

}  // namespace detail

inline bool residue_nonzero(const BlueprintPresentation& b, GenSet I) {
    return !classify(residue_system(b, I)).is_empty();
}

// p_I is prime iff no relation keeps exactly one term outside p_I (forcing
// closure fails otherwise) and the residue field at p_I is not the zero
// blueprint.
inline bool is_prime(const BlueprintPresentation& b, GenSet I) {
    if (I & b.inverted) return false;
    if (I & ~b.all_generators()) return false;
    detail::CompiledRelations c(b);
    return c.criterion(I) && residue_nonzero(b, I);
}

namespace detail {

class PrimeSearch {
public:
    PrimeSearch(const BlueprintPresentation& b) : b_(b), c_(b) {}

    // propagate forced membership; false on conflict
    bool propagate(GenSet& in, GenSet out) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& rel : c_.terms) {
                int outside = 0;
                GenSet last = 0;
                for (GenSet t : rel)
                    if (!(t & in)) {
                        ++outside;
                        last = t;
                        if (outside > 1) break;
                    }
                if (outside != 1) continue;
                GenSet cand = last & ~out;
                if (!cand) return false;
                if (popcount(cand) == 1) {
                    in |= cand;
                    changed = true;
                }
            }
        }
        return (in & out) == 0;
    }

    void dfs(GenSet in, GenSet out, std::vector<GenSet>& found) const {
        if (!propagate(in, out)) return;
        GenSet undecided = all_ & ~in & ~out;
        if (!undecided) {
            if (c_.criterion(in) && residue_nonzero(b_, in)) found.push_back(in);
            return;
        }
        int g = __builtin_ctzll(undecided);
        dfs(in, out | gen_bit(g), found);
        dfs(in | gen_bit(g), out, found);
    }

    // split the search tree into independent subtrees at a fixed depth
    void frontier(GenSet in, GenSet out, int depth, std::vector<std::pair<GenSet, GenSet>>& tasks) const {
        if (!propagate(in, out)) return;
        GenSet undecided = all_ & ~in & ~out;
        if (!undecided || depth == 0) {
            tasks.push_back({in, out});
            return;
        }
        int g = __builtin_ctzll(undecided);
        frontier(in, out | gen_bit(g), depth - 1, tasks);
        frontier(in | gen_bit(g), out, depth - 1, tasks);
    }

    GenSet all_ = 0;

private:
    const BlueprintPresentation& b_;
    CompiledRelations c_;
};

}  // namespace detail

inline std::vector<PrimePoint> enumerate_primes(const BlueprintPresentation& b, const SpectrumOptions& opt = {}) {
    if (b.size() > opt.cap)
        throw cap_exceeded("presentation has " + std::to_string(b.size()) + " generators, above the cap of " +
                           std::to_string(opt.cap) + "; raise it with --cap");
    detail::PrimeSearch search(b);
    search.all_ = b.all_generators();
    const unsigned threads = resolve_threads(opt.threads);
    std::vector<GenSet> found;
    if (threads <= 1 || b.size() < 12) {
        search.dfs(0, b.inverted, found);
    } else {
        std::vector<std::pair<GenSet, GenSet>> tasks;
        search.frontier(0, b.inverted, 8, tasks);
        std::vector<std::vector<GenSet>> results(tasks.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next++) < tasks.size();) search.dfs(tasks[i].first, tasks[i].second, results[i]);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (auto& r : results) found.insert(found.end(), r.begin(), r.end());
    }
    std::sort(found.begin(), found.end(), bitset_less);
    std::vector<PrimePoint> out;
    out.reserve(found.size());
    for (GenSet g : found) out.push_back({g});
    return out;
}

// Finite space ordered by inclusion of ideals (closure of p = up-set of p).
// `explicit_order`, when set, replaces inclusion (used for declared point
// lists and for exercising the sobriety checker).
struct SpectrumPoset {
    std::vector<PrimePoint> points;
    std::vector<std::pair<int, int>> hasse;  // (lower, higher)
    std::vector<int> component;              // component id per point
    int component_count = 0;
    std::vector<std::vector<bool>> explicit_order;

    bool leq(int i, int j) const {
        if (!explicit_order.empty()) return explicit_order[i][j];
        return (points[i].vars & ~points[j].vars) == 0;
    }
    int index_of(GenSet vars) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i].vars == vars) return static_cast<int>(i);
        return -1;
    }
};

namespace detail {

inline void union_find_components(SpectrumPoset& P, const std::vector<std::pair<int, int>>& links) {
    std::vector<int> parent(P.points.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : links) parent[find(a)] = find(b);
    std::unordered_map<int, int> ids;
    P.component.assign(P.points.size(), 0);
    for (std::size_t i = 0; i < P.points.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto it = ids.find(r);
        if (it == ids.end()) it = ids.emplace(r, static_cast<int>(ids.size())).first;
        P.component[i] = it->second;
    }
    P.component_count = static_cast<int>(ids.size());
}

}  // namespace detail

// Connected components of the order topology: minimal points sharing an
// upper bound are connected.
inline void assign_components(SpectrumPoset& P) {
    const auto& points = P.points;
    const std::size_t n = points.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return popcount(points[a].vars) < popcount(points[b].vars); });
    std::vector<int> minimal;
    std::vector<std::pair<int, int>> links;
    for (int x : order) {
        bool is_min = true;
        for (int m : minimal)
            if ((points[m].vars & ~points[x].vars) == 0) {
                is_min = false;
                links.push_back({m, x});
            }
        if (is_min) minimal.push_back(x);
    }
    detail::union_find_components(P, links);
}

inline SpectrumPoset poset(const std::vector<PrimePoint>& points) {
    SpectrumPoset P;
    P.points = points;
    const std::size_t n = points.size();
    std::unordered_map<GenSet, int> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(points[i].vars, static_cast<int>(i)).second)
            throw InputError("duplicate_point", "poset points must be distinct");
    }
    // Hasse edges: descend from each point through non-points until points
    // are hit, or scan all points when that is cheaper
    for (std::size_t y = 0; y < n; ++y) {
        const GenSet vy = points[y].vars;
        std::vector<GenSet> cands;
        if (popcount(vy) < 63 && (std::size_t{1} << popcount(vy)) <= n) {
            std::unordered_set<GenSet> seen;
            std::vector<GenSet> stack{vy};
            while (!stack.empty()) {
                GenSet z = stack.back();
                stack.pop_back();
                for (GenSet rest = z; rest; rest &= rest - 1) {
                    GenSet w = z & ~(rest & -rest);
                    if (!seen.insert(w).second) continue;
                    if (index.count(w)) cands.push_back(w);
                    else stack.push_back(w);
                }
            }
        } else {
            for (std::size_t x = 0; x < n; ++x)
                if (x != y && (points[x].vars & ~vy) == 0) cands.push_back(points[x].vars);
        }
        std::sort(cands.begin(), cands.end(), [](GenSet a, GenSet b) { return popcount(a) > popcount(b); });
        std::vector<GenSet> maximal;
        for (GenSet c : cands) {
            bool covered = false;
            for (GenSet d : maximal)
                if ((c & ~d) == 0) covered = true;
            if (covered) continue;
            maximal.push_back(c);
            P.hasse.push_back({index[c], static_cast<int>(y)});
        }
    }
    std::sort(P.hasse.begin(), P.hasse.end());
    assign_components(P);
    return P;
}

// A poset given by an explicit order relation (reflexive, transitive).
inline SpectrumPoset poset_with_order(const std::vector<PrimePoint>& points, std::vector<std::vector<bool>> order) {
    SpectrumPoset P;
    P.points = points;
    P.explicit_order = std::move(order);
    const int n = static_cast<int>(points.size());
    std::vector<std::pair<int, int>> links;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !P.leq(a, b) || P.leq(b, a)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && P.leq(a, c) && P.leq(c, b) && !P.leq(c, a) && !P.leq(b, c)) cover = false;
            if (cover) P.hasse.push_back({a, b});
            links.push_back({a, b});
        }
    detail::union_find_components(P, links);
    return P;
}

// Irreducible closed subsets of a finite space are exactly point closures;
// the space is sober iff each of them has a unique minimal (generic) point.
inline bool sobriety_check(const SpectrumPoset& P) {
    const int n = static_cast<int>(P.points.size());
    if (P.explicit_order.empty()) {
        std::unordered_set<GenSet> seen;
        for (const auto& p : P.points)
            if (!seen.insert(p.vars).second) return false;
        return true;
    }
    for (int x = 0; x < n; ++x) {
        int minimal = 0;
        for (int y = 0; y < n; ++y) {
            if (!P.leq(x, y)) continue;
            bool is_min = true;
            for (int z = 0; z < n && is_min; ++z)
                if (P.leq(x, z) && P.leq(z, y) && !P.leq(y, z)) is_min = false;
            if (is_min) ++minimal;
        }
        if (minimal != 1) return false;
    }
    return true;
}

inline std::string export_dot(const SpectrumPoset& P, const std::vector<std::string>& names) {
    std::string out = "digraph spectrum {\n";
    if (!P.points.empty()) out += "  rankdir=BT;\n";
    for (std::size_t i = 0; i < P.points.size(); ++i)
        out += "  p" + std::to_string(i) + " [label=\"" + format_ideal(P.points[i].vars, names) + "\"];\n";
    for (auto [a, b] : P.hasse) out += "  p" + std::to_string(a) + " -> p" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

// Quotient by the intersection of all primes (generators lying in every prime).
inline BlueprintPresentation reduce(const BlueprintPresentation& b, const std::vector<PrimePoint>& primes) {
    if (primes.empty()) return zero_presentation(b.generator_names);
    GenSet nil = b.all_generators();
    for (const auto& p : primes) nil &= p.vars;
    if (!nil) return b;
    return quotient_by_vars(b, nil);
}

inline BlueprintPresentation closed_subscheme(const BlueprintPresentation& b, const PrimePoint& p,
                                              const SpectrumOptions& opt = {}) {
    auto q = quotient_by_vars(b, p.vars);
    return reduce(q, enumerate_primes(q, opt));
}

struct ResidueField {
    std::optional<NormalFormBlueField> normal;  // set when a twisted lattice blue field
    BlueprintPresentation raw;
    CharacteristicClass characteristics;
};

inline ResidueField residue_field(const BlueprintPresentation& b, const PrimePoint& p) {
    UnitSystem u = residue_system(b, p.vars);
    ResidueField r;
    r.normal = normal_form(u);
    r.raw = to_presentation(u);
    r.characteristics = classify(u);
    return r;
}

// Potential characteristics of B: the union over its points of those of the
// residue fields (every morphism to a semifield factors through one).
inline CharacteristicClass potential_characteristics(const BlueprintPresentation& b, const SpectrumOptions& opt = {}) {
    CharacteristicClass acc = CharacteristicClass::only({});
    for (const auto& p : enumerate_primes(b, opt)) acc = unite(acc, classify(residue_system(b, p.vars)));
    return acc;
}

}  // namespace f1tits
