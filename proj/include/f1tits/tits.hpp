#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "group_model.hpp"
#include "spectrum.hpp"

namespace f1tits {

enum class HopfStatus { certified, rejected, unknown };

inline std::string to_string(HopfStatus s) {
    switch (s) {
        case HopfStatus::certified: return "certified";
        case HopfStatus::rejected: return "rejected";
        default: return "unknown";
    }
}

struct PseudoHopfResult {
    PrimePoint point;
    HopfStatus status = HopfStatus::unknown;
    std::optional<std::size_t> rank;  // dim of the closed subscheme over Q when certified
    std::size_t rank_lower_bound = 0;
    std::optional<NormalFormBlueField> field;  // unit field of the inverse closure
    CharacteristicClass characteristics;
    std::vector<std::string> diagnostics;
};

namespace detail {

inline UnitTerm unit_term(const Monomial& m, const std::vector<int>& idx) {
    UnitTerm t;
    t.sign = m.sign;
    for (int i : idx) t.exps.push_back(m.exps[i]);
    return t;
}

// coefficient of each unit class in a relation among units, modulo the lattice
inline std::map<std::vector<long long>, long long> class_coefficients(const UnitRelation& r, const SignedLattice& L) {
    std::map<std::vector<long long>, long long> coeff;
    const bool consistent = L.consistent();
    auto add = [&](const UnitTerm& t, long long side) {
        auto [v, b] = L.reduce(t.exps, t.sign);
        coeff[v] += (consistent && b) ? -side : side;
    };
    for (const auto& t : r.lhs) add(t, 1);
    for (const auto& t : r.rhs) add(t, -1);
    std::erase_if(coeff, [](const auto& kv) { return kv.second == 0; });
    return coeff;
}

}  // namespace detail

// Pseudo-Hopf test for the closed point set of p (the closed subscheme is
// B / p_I, already reduced since p_I is prime).
inline PseudoHopfResult analyze_point(const BlueprintPresentation& b, const PrimePoint& p) {
    PseudoHopfResult res;
    res.point = p;
    const GenSet killed = p.vars;
    const GenSet alive = b.all_generators() & ~killed;
    const GenSet units = detect_units(b, killed);

    struct LiveRel {
        std::vector<const Monomial*> lhs, rhs;
    };
    std::vector<LiveRel> rels;
    for (const auto& r : b.relations) {
        LiveRel lr;
        for (const auto& t : r.lhs.terms)
            if (!(t.support() & killed)) lr.lhs.push_back(&t);
        for (const auto& t : r.rhs.terms)
            if (!(t.support() & killed)) lr.rhs.push_back(&t);
        if (lr.lhs.size() + lr.rhs.size() > 0) rels.push_back(std::move(lr));
    }

    // generators expressible as sums of unit monomials: g*u == sum(...)
    GenSet generated = units;
    std::vector<int> defining(rels.size(), -1);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < rels.size(); ++k) {
            if (defining[k] >= 0) continue;
            for (int side = 0; side < 2; ++side) {
                const auto& one = side ? rels[k].rhs : rels[k].lhs;
                const auto& other = side ? rels[k].lhs : rels[k].rhs;
                if (one.size() != 1) continue;
                GenSet fresh = one[0]->support() & ~generated;
                if (popcount(fresh) != 1) continue;
                int g = __builtin_ctzll(fresh);
                if (one[0]->exps[g] != 1) continue;
                bool ok = true;
                for (const auto* t : other)
                    if (t->support() & ~generated) ok = false;
                if (!ok) continue;
                generated |= fresh;
                defining[k] = g;
                changed = true;
                break;
            }
        }
    }
    GenSet missing = alive & ~generated;
    if (missing) {
        res.status = HopfStatus::rejected;
        res.diagnostics.push_back("not generated by units: " + format_ideal(missing, b.generator_names));
        return res;
    }
    const GenSet derived = generated & ~units;

    std::vector<int> uidx;
    UnitSystem us;
    us.coeff_order = b.coeff_order;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (has_gen(units, static_cast<int>(i))) {
            uidx.push_back(static_cast<int>(i));
            us.names.push_back(b.generator_names[i]);
        }
    bool flat_unknown = false;
    for (std::size_t k = 0; k < rels.size(); ++k) {
        if (defining[k] >= 0) continue;
        UnitRelation ur;
        bool uses_derived = false;
        for (const auto* t : rels[k].lhs) {
            if (t->support() & derived) uses_derived = true;
            ur.lhs.push_back(detail::unit_term(*t, uidx));
        }
        for (const auto* t : rels[k].rhs) {
            if (t->support() & derived) uses_derived = true;
            ur.rhs.push_back(detail::unit_term(*t, uidx));
        }
        if (uses_derived) {
            flat_unknown = true;
            res.diagnostics.push_back("derived generator reappears in a further relation");
            continue;
        }
        us.relations.push_back(std::move(ur));
    }

    SignedLattice L = detail::build_lattice(us);
    if (!L.consistent()) {
        res.status = HopfStatus::rejected;
        res.diagnostics.push_back("relations force 1 + 1 == 0 (not flat over Z)");
        return res;
    }
    UnitSystem lattice_part;
    lattice_part.coeff_order = us.coeff_order;
    lattice_part.names = us.names;
    std::size_t open_relations = 0;
    for (const auto& r : us.relations) {
        if (r.size() == 2) {
            lattice_part.relations.push_back(r);
            continue;
        }
        auto coeff = detail::class_coefficients(r, L);
        if (coeff.empty()) continue;
        if (coeff.size() == 1) {
            res.status = HopfStatus::rejected;
            res.diagnostics.push_back("relation n * u == 0 with n != 0 (torsion)");
            return res;
        }
        ++open_relations;
    }
    const std::size_t free_rank = L.free_rank();
    res.rank_lower_bound = free_rank > open_relations ? free_rank - open_relations : 0;
    res.field = normal_form(lattice_part);
    res.characteristics = classify(residue_system(b, killed));
    if (res.characteristics.kind == CharacteristicClass::Kind::finite) {
        res.status = HopfStatus::rejected;
        res.diagnostics.push_back("potential characteristics " + res.characteristics.label() +
                                  " are not almost indefinite");
        return res;
    }
    if (open_relations) {
        flat_unknown = true;
        res.diagnostics.push_back("relations among units with three or more classes");
    }
    if (flat_unknown || res.characteristics.is_unknown()) {
        if (res.characteristics.is_unknown())
            res.diagnostics.push_back("characteristic unknown: " + res.characteristics.diagnostics);
        res.status = HopfStatus::unknown;
        return res;
    }
    res.status = HopfStatus::certified;
    res.rank = free_rank;
    res.rank_lower_bound = free_rank;
    return res;
}

inline std::vector<PseudoHopfResult> pseudo_hopf_points(const BlueprintPresentation& b,
                                                        const std::vector<PrimePoint>& primes) {
    std::vector<PseudoHopfResult> out;
    out.reserve(primes.size());
    for (const auto& p : primes) out.push_back(analyze_point(b, p));
    return out;
}

inline std::vector<PseudoHopfResult> pseudo_hopf_points(const BlueprintPresentation& b, const SpectrumOptions& opt = {}) {
    return pseudo_hopf_points(b, enumerate_primes(b, opt));
}

struct RankSpacePoint {
    PrimePoint point;
    NormalFormBlueField field;
    std::size_t rank = 0;
    int component = 0;
    std::string label;
};

struct RankSpace {
    std::vector<RankSpacePoint> points;
    std::size_t generator_count = 0;
    std::vector<std::string> generator_names;
    std::optional<std::size_t> rank() const {
        if (points.empty()) return std::nullopt;
        for (const auto& p : points)
            if (p.rank != points[0].rank) return std::nullopt;
        return points[0].rank;
    }
};

inline RankSpace rank_space(const BlueprintPresentation& b, const SpectrumOptions& opt = {}) {
    auto primes = enumerate_primes(b, opt);
    SpectrumPoset P;
    P.points = primes;
    assign_components(P);
    auto analyses = pseudo_hopf_points(b, primes);
    RankSpace rs;
    rs.generator_count = b.size();
    rs.generator_names = b.generator_names;
    for (int c = 0; c < P.component_count; ++c) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (P.component[i] == c && analyses[i].status == HopfStatus::certified)
                best = best ? std::min(*best, *analyses[i].rank) : *analyses[i].rank;
        std::string blockers;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (P.component[i] == c && analyses[i].status == HopfStatus::unknown &&
                (!best || analyses[i].rank_lower_bound <= *best))
                blockers += " " + format_ideal(primes[i].vars, b.generator_names);
        if (!blockers.empty()) throw undecidable("pseudo-Hopf status unknown at possibly minimal rank:" + blockers);
        if (!best) continue;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (P.component[i] == c && analyses[i].status == HopfStatus::certified && *analyses[i].rank == *best)
                rs.points.push_back({primes[i], *analyses[i].field, *best, c,
                                     format_ideal(primes[i].vars, b.generator_names)});
    }
    std::sort(rs.points.begin(), rs.points.end(),
              [](const auto& x, const auto& y) { return bitset_less(x.point.vars, y.point.vars); });
    return rs;
}

inline RankSpace rank_space(const GroupModel& g, const SpectrumOptions& opt = {}) {
    RankSpace rs;
    if (g.declared) {
        rs.generator_count = g.presentation.size();
        rs.generator_names = g.presentation.generator_names;
        for (std::size_t k = 0; k < g.declared->rank_points.size(); ++k) {
            int i = g.declared->rank_points[k];
            const auto& f = g.declared->rank_fields[k];
            rs.points.push_back({g.declared->points[i], f, f.free_rank, 0, g.declared->labels[i]});
        }
    } else {
        rs = rank_space(g.presentation, opt);
    }
    if (g.rank_filter) std::erase_if(rs.points, [&](const RankSpacePoint& p) { return !g.rank_filter(p.point.vars); });
    return rs;
}

struct WeylMonoid {
    std::vector<RankSpacePoint> elements;
    std::vector<std::vector<int>> table;
    int identity = -1;
    std::size_t size() const { return elements.size(); }
};

namespace detail {

inline GenSet term_support(const std::vector<int>& e) {
    GenSet s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) s |= gen_bit(static_cast<int>(i));
    return s;
}

// generators whose comultiplication image has a term surviving on x (primed) and y (double-primed)
inline GenSet surviving(const Comultiplication& d, GenSet alive_x, GenSet alive_y) {
    GenSet out = 0;
    for (std::size_t g = 0; g < d.images.size(); ++g)
        for (const auto& t : d.images[g])
            if ((term_support(t.left) & ~alive_x) == 0 && (term_support(t.right) & ~alive_y) == 0) {
                out |= gen_bit(static_cast<int>(g));
                break;
            }
    return out;
}

}  // namespace detail

inline WeylMonoid induced_weyl_law(const RankSpace& rs, const Comultiplication& delta,
                                   std::optional<GenSet> counit = std::nullopt,
                                   std::optional<GenSet> identity_point = std::nullopt) {
    WeylMonoid w;
    w.elements = rs.points;
    const std::size_t n = w.size();
    const GenSet all = rs.generator_count == 64 ? ~GenSet{0} : gen_bit(static_cast<int>(rs.generator_count)) - 1;
    std::map<GenSet, int> by_alive;
    for (std::size_t i = 0; i < n; ++i) {
        GenSet alive = all & ~w.elements[i].point.vars;
        if (!by_alive.emplace(alive, static_cast<int>(i)).second)
            throw ComputationError("duplicate_pattern", "two rank points share a vanishing pattern");
    }
    w.table.assign(n, std::vector<int>(n, -1));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            GenSet s = detail::surviving(delta, all & ~w.elements[x].point.vars, all & ~w.elements[y].point.vars);
            auto it = by_alive.find(s);
            if (it == by_alive.end())
                throw law_does_not_descend("product of " + w.elements[x].label + " and " + w.elements[y].label +
                                           " matches no rank point");
            w.table[x][y] = it->second;
        }
    if (counit) {
        auto it = by_alive.find(*counit & all);
        if (it != by_alive.end()) w.identity = it->second;
    }
    if (w.identity < 0 && identity_point) {
        for (std::size_t i = 0; i < n; ++i)
            if (w.elements[i].point.vars == *identity_point) w.identity = static_cast<int>(i);
    }
    if (w.identity < 0)
        throw law_does_not_descend("no rank point matches the identity pattern");
    return w;
}

inline WeylMonoid induced_weyl_law(const GroupModel& g, const SpectrumOptions& opt = {}) {
    return induced_weyl_law(rank_space(g, opt), g.comult, g.counit, g.identity_point);
}

inline bool is_associative(const std::vector<std::vector<int>>& t) {
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
}

inline bool is_identity(const std::vector<std::vector<int>>& t, int e) {
    for (std::size_t a = 0; a < t.size(); ++a)
        if (t[e][a] != static_cast<int>(a) || t[a][e] != static_cast<int>(a)) return false;
    return true;
}

inline bool is_group(const std::vector<std::vector<int>>& t, int e) {
    if (!is_associative(t) || !is_identity(t, e)) return false;
    for (std::size_t a = 0; a < t.size(); ++a) {
        bool inv = false;
        for (std::size_t b = 0; b < t.size(); ++b)
            if (t[a][b] == e && t[b][a] == e) inv = true;
        if (!inv) return false;
    }
    return true;
}

// A Tits point over F_{1^m}: a rank point with a morphism of its unit field
// into {0} u mu_m, given by the value (+1 or -1) of each unit generator.
struct TitsPoint {
    int rank_point = 0;
    std::vector<int> values;  // per unit generator: 0 for +1, 1 for -1
};

struct TitsPoints {
    std::vector<TitsPoint> points;
    std::vector<std::vector<int>> table;
    std::size_t count() const { return points.size(); }
};

// Sign assignments x in F_2^units solving  v . x = b (mod 2)  for every lattice row.
inline std::vector<std::vector<int>> sign_solutions(const NormalFormBlueField& f, int m) {
    const std::size_t n = f.unit_names.size();
    std::vector<std::vector<int>> out;
    if (m == 1) {
        if (f.epsilon == 1) out.push_back(std::vector<int>(n, 0));
        return out;
    }
    // Gaussian elimination over F_2 on augmented rows
    std::vector<std::vector<int>> rows;
    for (std::size_t k = 0; k < f.lattice.size(); ++k) {
        std::vector<int> r(n + 1);
        for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(f.lattice[k][i] & 1);
        r[n] = f.signs[k];
        rows.push_back(std::move(r));
    }
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i][c])
                for (std::size_t j = 0; j <= n; ++j) rows[i][j] ^= rows[rank][j];
        pivot_col.push_back(static_cast<int>(c));
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i][n]) return out;
    std::vector<int> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) == pivot_col.end())
            free_cols.push_back(static_cast<int>(c));
    if (free_cols.size() > 24) throw cap_exceeded("too many sign assignments to enumerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_cols.size()); ++mask) {
        std::vector<int> x(n, 0);
        for (std::size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = static_cast<int>((mask >> k) & 1);
        for (std::size_t k = 0; k < rank; ++k) {
            int v = rows[k][n];
            for (std::size_t c = 0; c < n; ++c)
                if (static_cast<int>(c) != pivot_col[k] && rows[k][c]) v ^= x[c];
            x[pivot_col[k]] = v;
        }
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline TitsPoints tits_points(const RankSpace& rs, const WeylMonoid& w, const Comultiplication& delta, int m) {
    if (m != 1 && m != 2) throw InputError("invalid_argument", "m must be 1 or 2");
    TitsPoints tp;
    // unit generator name -> presentation index, per rank point
    std::vector<std::vector<int>> unit_index(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (const auto& name : w.elements[i].field.unit_names) {
            auto it = std::find(rs.generator_names.begin(), rs.generator_names.end(), name);
            unit_index[i].push_back(it == rs.generator_names.end() ? -1 : static_cast<int>(it - rs.generator_names.begin()));
        }
        for (auto& x : sign_solutions(w.elements[i].field, m)) tp.points.push_back({static_cast<int>(i), std::move(x)});
    }
    std::map<std::pair<int, std::vector<int>>, int> lookup;
    for (std::size_t k = 0; k < tp.points.size(); ++k) lookup[{tp.points[k].rank_point, tp.points[k].values}] = static_cast<int>(k);

    auto value_of = [&](const TitsPoint& p, const std::vector<int>& exps) -> std::optional<int> {
        int s = 0;
        for (std::size_t g = 0; g < exps.size(); ++g) {
            if (exps[g] == 0) continue;
            auto& idx = unit_index[p.rank_point];
            auto it = std::find(idx.begin(), idx.end(), static_cast<int>(g));
            if (it == idx.end()) return std::nullopt;
            s ^= (exps[g] & 1) * p.values[it - idx.begin()];
        }
        return s;
    };
    const std::size_t n = tp.points.size();
    tp.table.assign(n, std::vector<int>(n, -1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto& x = tp.points[a];
            const auto& y = tp.points[b];
            int z = w.table[x.rank_point][y.rank_point];
            std::vector<int> vals;
            for (int g : unit_index[z]) {
                if (g < 0) throw law_does_not_descend("unit generator without presentation index");
                int plus = 0, minus = 0;
                for (const auto& t : delta.images[g]) {
                    auto l = value_of(x, t.left);
                    auto r = value_of(y, t.right);
                    if (!l || !r) continue;
                    ((t.sign + *l + *r) & 1 ? minus : plus)++;
                }
                if (plus + minus != 1)
                    throw law_does_not_descend("Tits point product is not a single signed monomial");
                vals.push_back(minus);
            }
            auto it = lookup.find({z, vals});
            if (it == lookup.end()) throw law_does_not_descend("Tits point product leaves the set of Tits points");
            tp.table[a][b] = it->second;
        }
    return tp;
}

inline TitsPoints tits_points(const GroupModel& g, int m, const SpectrumOptions& opt = {}) {
    auto rs = rank_space(g, opt);
    auto w = induced_weyl_law(rs, g.comult, g.counit, g.identity_point);
    return tits_points(rs, w, g.comult, m);
}

struct ProductReport {
    bool ok = true;
    std::size_t rank_left = 0, rank_right = 0, rank_product = 0;
    std::size_t points_left = 0, points_right = 0, points_product = 0;
    std::vector<std::string> violations;
};

inline ProductReport product_check(const BlueprintPresentation& b1, const BlueprintPresentation& b2,
                                   const SpectrumOptions& opt = {}) {
    ProductReport rep;
    auto z1 = rank_space(b1, opt);
    auto z2 = rank_space(b2, opt);
    auto z12 = rank_space(tensor(b1, b2), opt);
    rep.points_left = z1.points.size();
    rep.points_right = z2.points.size();
    rep.points_product = z12.points.size();
    rep.rank_left = z1.rank().value_or(0);
    rep.rank_right = z2.rank().value_or(0);
    rep.rank_product = z12.rank().value_or(0);
    std::set<GenSet> expected, actual;
    for (const auto& x : z1.points)
        for (const auto& y : z2.points) expected.insert(x.point.vars | (y.point.vars << b1.size()));
    for (const auto& z : z12.points) actual.insert(z.point.vars);
    if (expected != actual) {
        rep.ok = false;
        rep.violations.push_back("Z(X x Y) differs from Z(X) x Z(Y)");
    }
    if (!z1.rank() || !z2.rank() || !z12.rank() || *z12.rank() != *z1.rank() + *z2.rank()) {
        rep.ok = false;
        rep.violations.push_back("rank is not additive");
    }
    return rep;
}

}  // namespace f1tits
