#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "characteristic.hpp"
#include "lattice.hpp"
#include "presentation.hpp"

namespace f1tits {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Relations among units only: every term is (-1)^sign * x^exps with x ranging
// over invertible generators.  This is the shape of a residue field and of a
// unit field.
struct UnitTerm {
    std::vector<long long> exps;
    int sign = 0;
};
struct UnitRelation {
    std::vector<UnitTerm> lhs, rhs;
    std::size_t size() const { return lhs.size() + rhs.size(); }
};
struct UnitSystem {
    int coeff_order = 1;
    std::vector<std::string> names;
    std::vector<UnitRelation> relations;
    std::size_t size() const { return names.size(); }
};

// F_{1^eps}[Lambda]: units with exponent relations x^v = (-1)^b.
struct NormalFormBlueField {
    int epsilon = 1;
    std::vector<std::string> unit_names;
    IntMatrix lattice;       // rows = relations, columns = unit generators
    std::vector<int> signs;  // sign bit of each row
    std::size_t free_rank = 0;
    std::vector<long long> torsion_invariants;
};

namespace detail {

inline std::vector<long long> lattice_row(const UnitTerm& a, const UnitTerm& b) {
    std::vector<long long> v(a.exps.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.exps[i] - b.exps[i];
    return v;
}

// The identity among units expressed by a 2-term relation.
inline std::pair<std::vector<long long>, int> two_term_row(const UnitRelation& r) {
    if (r.lhs.size() == 1 && r.rhs.size() == 1)
        return {lattice_row(r.lhs[0], r.rhs[0]), (r.lhs[0].sign + r.rhs[0].sign) & 1};
    const auto& side = r.lhs.empty() ? r.rhs : r.lhs;
    return {lattice_row(side[0], side[1]), (1 + side[0].sign + side[1].sign) & 1};
}

inline SignedLattice build_lattice(const UnitSystem& u) {
    SignedLattice L(u.size());
    for (const auto& r : u.relations)
        if (r.size() == 2) {
            auto [v, b] = two_term_row(r);
            L.add(std::move(v), b);
        }
    return L;
}

inline std::set<long long> prime_factors(BigInt n) {
    std::set<long long> out;
    if (n < 0) n = -n;
    if (n < 2) return out;
    for (long long p = 2; p <= 1000000; ++p) {
        if (BigInt(p) * p > n) break;
        while (n % p == 0) {
            out.insert(p);
            n /= p;
        }
    }
    if (n > 1) {
        if (n > BigInt(1000000) * 1000000)
            throw ComputationError("factorization", "cannot factor large characteristic witness");
        out.insert(static_cast<long long>(n));
    }
    return out;
}

inline long long mod_pow(long long a, long long e, long long p) {
    a %= p;
    if (a < 0) a += p;
    long long r = 1;
    while (e > 0) {
        if (e & 1) r = static_cast<long long>((__int128)r * a % p);
        a = static_cast<long long>((__int128)a * a % p);
        e >>= 1;
    }
    return r;
}
inline long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

// Per-relation class coefficients: relation <=> sum_c n_c [c] = 0 in the
// twisted group ring of Lambda.
struct ClassRelation {
    std::map<std::vector<long long>, long long> coeff;
};

}  // namespace detail

// Exact classification of the potential characteristics of a blue field all
// of whose generators are units, as far as the structure allows: 2-term
// relations give the twisted lattice, relations with more terms are grouped
// into classes modulo the lattice and decided when each involves at most two
// classes.  Otherwise the answer is `unknown`.
inline CharacteristicClass classify(const UnitSystem& u) {
    using detail::ClassRelation;
    const std::size_t n = u.size();
    bool char1 = u.coeff_order == 1;
    for (const auto& r : u.relations) {
        if (r.size() == 1) return CharacteristicClass::only({});  // 1 == 0
        if (r.lhs.empty() != r.rhs.empty()) char1 = false;
    }
    SignedLattice L = detail::build_lattice(u);
    const bool consistent = L.consistent();

    std::vector<ClassRelation> extras;
    for (const auto& r : u.relations) {
        if (r.size() < 3) continue;
        ClassRelation cr;
        auto add = [&](const UnitTerm& t, long long side) {
            auto [v, b] = L.reduce(t.exps, t.sign);
            long long s = (consistent && b) ? -side : side;
            cr.coeff[v] += s;
        };
        for (const auto& t : r.lhs) add(t, 1);
        for (const auto& t : r.rhs) add(t, -1);
        std::erase_if(cr.coeff, [](const auto& kv) { return kv.second == 0; });
        if (!cr.coeff.empty()) extras.push_back(std::move(cr));
    }

    std::set<long long> bad{2};
    for (const auto& cr : extras)
        for (const auto& [v, c] : cr.coeff) {
            auto f = detail::prime_factors(BigInt(c));
            bad.insert(f.begin(), f.end());
        }

    const IntMatrix& H = L.hermite_rows();
    const std::vector<int>& Hb = L.hermite_bits();

    // nonzero(p): does the blue field admit a morphism into a field of
    // characteristic p?  p = 0 also decides all primes outside `bad`.
    std::string why;
    auto nonzero = [&](long long p, std::set<long long>* extra_bad) -> std::optional<bool> {
        if (!consistent && p != 2) return false;
        struct Constraint {
            std::vector<long long> u;
            long long num, den;  // value -num/den... stored as the target value num/den
        };
        std::vector<Constraint> cons;
        for (const auto& cr : extras) {
            std::vector<std::pair<const std::vector<long long>*, long long>> live;
            for (const auto& [v, c] : cr.coeff) {
                long long cm = p == 0 ? c : ((c % p) + p) % p;
                if (cm != 0) live.push_back({&v, c});
            }
            if (live.empty()) continue;
            if (live.size() == 1) return false;
            if (live.size() > 2) {
                why = "relation with three or more independent unit classes";
                return std::nullopt;
            }
            // n_a chi(a) + n_b chi(b) = 0  =>  chi(a - b) = -n_b / n_a
            std::vector<long long> du(n);
            for (std::size_t i = 0; i < n; ++i) du[i] = (*live[0].first)[i] - (*live[1].first)[i];
            cons.push_back({std::move(du), -live[1].second, live[0].second});
        }
        if (cons.empty()) return true;
        IntMatrix stacked = H;
        for (const auto& c : cons) stacked.push_back(c.u);
        IntMatrix ker = integer_left_kernel(stacked, n);
        const bool sign_trivial = p == 2 || !consistent;
        for (const auto& k : ker) {
            long long parity = 0;
            for (std::size_t i = 0; i < H.size(); ++i) parity += (k[i] & 1) * Hb[i];
            int sgn = (!sign_trivial && (parity & 1)) ? -1 : 1;
            if (p == 0) {
                BigRational val = sgn;
                for (std::size_t j = 0; j < cons.size(); ++j) {
                    long long e = k[H.size() + j];
                    BigRational c = BigRational(BigInt(cons[j].num)) / BigRational(BigInt(cons[j].den));
                    BigRational f = 1;
                    for (long long t = 0; t < std::llabs(e); ++t) f *= c;
                    val *= e >= 0 ? f : BigRational(1) / f;
                }
                if (val != 1) {
                    if (extra_bad) {
                        BigRational d = val - 1;
                        auto f = detail::prime_factors(boost::multiprecision::numerator(d));
                        extra_bad->insert(f.begin(), f.end());
                    }
                    return false;
                }
            } else {
                long long val = sgn == -1 ? p - 1 : 1;
                for (std::size_t j = 0; j < cons.size(); ++j) {
                    long long e = k[H.size() + j];
                    long long c = ((cons[j].num % p) + p) % p * detail::mod_inv(((cons[j].den % p) + p) % p, p) % p;
                    long long f = detail::mod_pow(c, std::llabs(e), p);
                    if (e < 0) f = detail::mod_inv(f, p);
                    val = static_cast<long long>((__int128)val * f % p);
                }
                if (val != 1 % p) return false;
            }
        }
        return true;
    };

    std::set<long long> extra_bad;
    auto generic = nonzero(0, &extra_bad);
    if (!generic) return CharacteristicClass::unknown(why);
    bad.insert(extra_bad.begin(), extra_bad.end());
    std::set<long long> yes, no;
    for (long long p : bad) {
        auto r = nonzero(p, nullptr);
        if (!r) return CharacteristicClass::unknown(why);
        (*r ? yes : no).insert(p);
    }
    if (*generic) {
        if (!char1) no.insert(1);
        return CharacteristicClass::all_but(no);
    }
    if (char1) yes.insert(1);
    return CharacteristicClass::only(yes);
}

// Twisted lattice normal form, available when every relation has exactly two
// terms and the signs are consistent.
inline std::optional<NormalFormBlueField> normal_form(const UnitSystem& u) {
    for (const auto& r : u.relations)
        if (r.size() != 2) return std::nullopt;
    SignedLattice L = detail::build_lattice(u);
    if (!L.consistent()) return std::nullopt;
    NormalFormBlueField f;
    f.unit_names = u.names;
    f.lattice = L.raw_rows();
    f.signs = L.raw_bits();
    f.epsilon = u.coeff_order;
    for (int b : f.signs)
        if (b) f.epsilon = 2;
    f.free_rank = L.free_rank();
    f.torsion_invariants = L.torsion();
    return f;
}

inline UnitSystem to_unit_system(const NormalFormBlueField& f) {
    UnitSystem u;
    u.coeff_order = f.epsilon;
    u.names = f.unit_names;
    const std::size_t n = f.unit_names.size();
    for (std::size_t k = 0; k < f.lattice.size(); ++k) {
        UnitTerm a, b;
        a.exps.assign(n, 0);
        b.exps.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) (f.lattice[k][i] > 0 ? a : b).exps[i] = std::llabs(f.lattice[k][i]);
        a.sign = f.signs[k];
        u.relations.push_back({{a}, {b}});
    }
    return u;
}

inline CharacteristicClass potential_characteristics(const NormalFormBlueField& f) {
    return classify(to_unit_system(f));
}

// Restrict a presentation to the generators outside `killed`, all treated as
// invertible (the residue field at p_killed).  Relations that become 0 == 0
// or identical on both sides are dropped.
inline UnitSystem residue_system(const BlueprintPresentation& b, GenSet killed) {
    UnitSystem u;
    u.coeff_order = b.coeff_order;
    std::vector<int> idx;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!has_gen(killed, static_cast<int>(i))) {
            idx.push_back(static_cast<int>(i));
            u.names.push_back(b.generator_names[i]);
        }
    auto conv = [&](const FormalSum& s, std::vector<UnitTerm>& out) {
        for (const auto& m : s.terms) {
            if (m.support() & killed) continue;
            UnitTerm t;
            t.sign = m.sign;
            for (int i : idx) t.exps.push_back(m.exps[i]);
            out.push_back(std::move(t));
        }
    };
    for (const auto& r : b.relations) {
        UnitRelation ur;
        conv(r.lhs, ur.lhs);
        conv(r.rhs, ur.rhs);
        if (ur.size() == 0) continue;
        u.relations.push_back(std::move(ur));
    }
    return u;
}

inline BlueprintPresentation to_presentation(const UnitSystem& u) {
    BlueprintPresentation b;
    b.generator_names = u.names;
    b.inverted = b.all_generators();
    b.coeff_order = u.coeff_order;
    auto conv = [&](const std::vector<UnitTerm>& ts) {
        std::vector<Monomial> out;
        for (const auto& t : ts) {
            Monomial m(u.size());
            m.sign = t.sign % u.coeff_order;
            for (std::size_t i = 0; i < u.size(); ++i) m.exps[i] = static_cast<int>(t.exps[i]);
            out.push_back(m);
        }
        return out;
    };
    for (const auto& r : u.relations) b.add_relation(conv(r.lhs), conv(r.rhs));
    b.canonicalize();
    return b;
}

// Generators detected as units: inverted ones, plus every factor of a
// monomial that a 2-term relation identifies with a unit (m == u or
// m + u == 0).  Generators in `killed` are ignored.
inline GenSet detect_units(const BlueprintPresentation& b, GenSet killed = 0) {
    GenSet units = b.inverted & ~killed;
    bool changed = true;
    auto unit_term = [&](const Monomial& m) { return (m.support() & ~units) == 0; };
    while (changed) {
        changed = false;
        for (const auto& r : b.relations) {
            std::vector<const Monomial*> terms;
            for (const auto& t : r.lhs.terms)
                if (!(t.support() & killed)) terms.push_back(&t);
            for (const auto& t : r.rhs.terms)
                if (!(t.support() & killed)) terms.push_back(&t);
            if (terms.size() != 2) continue;
            for (int k = 0; k < 2; ++k)
                if (unit_term(*terms[1 - k])) {
                    GenSet add = terms[k]->support() & ~units;
                    if (add) {
                        units |= add;
                        changed = true;
                    }
                }
        }
    }
    return units;
}

struct UnitFieldResult {
    BlueprintPresentation field;
    std::vector<std::string> diagnostics;
};

inline UnitFieldResult unit_field_detailed(const BlueprintPresentation& b) {
    GenSet units = detect_units(b);
    UnitFieldResult res;
    BlueprintPresentation& f = res.field;
    f.coeff_order = b.coeff_order;
    std::vector<int> idx;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (has_gen(units, static_cast<int>(i))) {
            idx.push_back(static_cast<int>(i));
            f.generator_names.push_back(b.generator_names[i]);
        }
    f.inverted = f.all_generators();
    for (const auto& r : b.relations) {
        bool ok = true;
        auto conv = [&](const FormalSum& s) {
            std::vector<Monomial> out;
            for (const auto& m : s.terms) {
                if (m.support() & ~units) {
                    ok = false;
                    continue;
                }
                Monomial t(idx.size());
                t.sign = m.sign;
                for (std::size_t k = 0; k < idx.size(); ++k) t.exps[k] = m.exps[idx[k]];
                out.push_back(t);
            }
            return out;
        };
        auto l = conv(r.lhs), rr = conv(r.rhs);
        if (ok) f.add_relation(std::move(l), std::move(rr));
    }
    f.canonicalize();
    GenSet non_units = b.all_generators() & ~units;
    if (non_units)
        res.diagnostics.push_back("generators without detected inverse: " + format_ideal(non_units, b.generator_names));
    return res;
}

inline BlueprintPresentation unit_field(const BlueprintPresentation& b) { return unit_field_detailed(b).field; }

struct InverseClosureResult {
    std::optional<BlueprintPresentation> closure;  // empty when unsupported
    std::vector<std::string> diagnostics;
    bool supported() const { return closure.has_value(); }
};

// Inverse closure on the normal-form class: every generator is a unit or
// annihilated (T == 0).  The coefficient order becomes 2 exactly when a
// relation m + sum == 0 exhibits an additive inverse of a unit.
inline InverseClosureResult inverse_closure(const BlueprintPresentation& b) {
    InverseClosureResult res;
    GenSet zeroed = 0;
    for (const auto& r : b.relations) {
        if (r.lhs.empty() && r.rhs.size() == 1 && r.rhs.terms[0].sign == 0) {
            GenSet s = r.rhs.terms[0].support();
            if (popcount(s) == 1) zeroed |= s;
        }
    }
    GenSet units = detect_units(b, zeroed);
    GenSet outside = b.all_generators() & ~units & ~zeroed;
    if (outside) {
        res.diagnostics.push_back("unsupported: generators neither unit nor zero: " +
                                  format_ideal(outside, b.generator_names));
        return res;
    }
    BlueprintPresentation out = b;
    if (out.coeff_order == 1) {
        for (const auto& r : b.relations) {
            const FormalSum* s = r.lhs.empty() ? &r.rhs : (r.rhs.empty() ? &r.lhs : nullptr);
            if (!s || s->size() < 2) continue;
            bool all_units = true;
            for (const auto& t : s->terms)
                if (t.support() & ~units) all_units = false;
            if (all_units) {
                out.coeff_order = 2;
                res.diagnostics.push_back("additive inverse witnessed by " + to_string(r, b.generator_names));
                break;
            }
        }
    }
    res.closure = std::move(out);
    return res;
}

}  // namespace f1tits
