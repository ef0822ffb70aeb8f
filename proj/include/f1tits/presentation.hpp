#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace f1tits {

// B = A // R: free monoid on generators (some inverted) with coefficients in
// F_1 (coeff_order 1) or F_{1^2} (coeff_order 2), modulo formal-sum relations.
struct BlueprintPresentation {
    std::vector<std::string> generator_names;
    GenSet inverted = 0;
    int coeff_order = 1;
    std::vector<Relation> relations;

    std::size_t size() const { return generator_names.size(); }
    GenSet all_generators() const {
        return size() == 64 ? ~GenSet{0} : gen_bit(static_cast<int>(size())) - 1;
    }
    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < generator_names.size(); ++i)
            if (generator_names[i] == name) return static_cast<int>(i);
        return -1;
    }

    Monomial one() const { return Monomial::unit(size()); }
    Monomial var(int i, int power = 1) const { return Monomial::var(size(), i, power); }
    Monomial minus_one() const {
        Monomial m = one();
        m.sign = coeff_order == 2 ? 1 : 0;
        return m;
    }

    void add_relation(std::vector<Monomial> lhs, std::vector<Monomial> rhs) {
        Relation r{FormalSum(std::move(lhs)), FormalSum(std::move(rhs))};
        if (!r.trivial()) relations.push_back(std::move(r));
    }

    // sort and deduplicate relations, drop trivial ones
    void canonicalize() {
        for (auto& r : relations) r.canonicalize();
        std::erase_if(relations, [](const Relation& r) { return r.trivial(); });
        std::sort(relations.begin(), relations.end());
        relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
    }

    void validate() const {
        if (coeff_order != 1 && coeff_order != 2)
            throw InputError("invalid_presentation", "coeff_order must be 1 or 2");
        if (size() > static_cast<std::size_t>(kMaxGenerators))
            throw InputError("invalid_presentation", "at most 64 generators are supported");
        std::set<std::string> seen(generator_names.begin(), generator_names.end());
        if (seen.size() != generator_names.size())
            throw InputError("invalid_presentation", "generator names must be unique");
        if (inverted & ~all_generators())
            throw InputError("invalid_presentation", "inverted set references unknown generator");
        auto check = [&](const Monomial& m) {
            if (m.exps.size() != size())
                throw InputError("invalid_presentation", "monomial length does not match generator count");
            if (m.sign < 0 || m.sign >= coeff_order)
                throw InputError("invalid_presentation", "sign exponent out of range");
            for (std::size_t i = 0; i < size(); ++i)
                if (m.exps[i] < 0 && !has_gen(inverted, static_cast<int>(i)))
                    throw InputError("invalid_presentation",
                                     "negative exponent at non-inverted generator " + generator_names[i]);
        };
        for (const auto& r : relations) {
            for (const auto& t : r.lhs.terms) check(t);
            for (const auto& t : r.rhs.terms) check(t);
        }
    }

    bool operator==(const BlueprintPresentation&) const = default;
};

inline std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    if (m.zero) return "0";
    std::string body;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!body.empty()) body += "*";
        body += names[i];
        if (m.exps[i] != 1) body += "^" + std::to_string(m.exps[i]);
    }
    if (body.empty()) body = "1";
    return (m.sign ? "-" : "") + body;
}

inline std::string to_string(const FormalSum& s, const std::vector<std::string>& names) {
    if (s.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        if (i) out += " + ";
        out += to_string(s.terms[i], names);
    }
    return out;
}

inline std::string to_string(const Relation& r, const std::vector<std::string>& names) {
    return to_string(r.lhs, names) + " == " + to_string(r.rhs, names);
}

inline std::string format_ideal(GenSet vars, const std::vector<std::string>& names) {
    std::string out = "(";
    bool first = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!has_gen(vars, static_cast<int>(i))) continue;
        if (!first) out += ",";
        out += names[i];
        first = false;
    }
    return out + ")";
}

inline BlueprintPresentation mk_free(std::size_t n, GenSet inverted = 0, int m = 1) {
    BlueprintPresentation b;
    for (std::size_t i = 0; i < n; ++i) b.generator_names.push_back("T" + std::to_string(i + 1));
    b.inverted = inverted;
    b.coeff_order = m;
    b.validate();
    return b;
}

// The zero blueprint 1 == 0 on the given generators.
inline BlueprintPresentation zero_presentation(std::vector<std::string> names) {
    BlueprintPresentation b;
    b.generator_names = std::move(names);
    b.add_relation({b.one()}, {});
    return b;
}

// Kill the generators in I: every monomial containing one of them becomes 0.
// The generators stay in place (so indices remain comparable) and receive a
// relation T == 0.
inline BlueprintPresentation quotient_by_vars(const BlueprintPresentation& b, GenSet I) {
    BlueprintPresentation out = b;
    out.relations.clear();
    auto survives = [&](const Monomial& m) { return (m.support() & I) == 0; };
    for (const auto& r : b.relations) {
        std::vector<Monomial> l, rr;
        for (const auto& t : r.lhs.terms)
            if (survives(t)) l.push_back(t);
        for (const auto& t : r.rhs.terms)
            if (survives(t)) rr.push_back(t);
        if (l.empty() && rr.empty()) continue;
        out.add_relation(std::move(l), std::move(rr));
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        if (has_gen(I, static_cast<int>(i))) out.add_relation({b.var(static_cast<int>(i))}, {});
    out.canonicalize();
    return out;
}

inline BlueprintPresentation localize(const BlueprintPresentation& b, GenSet S) {
    BlueprintPresentation out = b;
    out.inverted |= S;
    return out;
}

// A morphism of the base F1[t_1..t_k] (or Laurent) into each factor:
// base generator j maps to f1[j] in the left factor and f2[j] in the right.
struct BaseMaps {
    std::vector<Monomial> f1, f2;
};

inline bool is_unit_monomial(const BlueprintPresentation& b, const Monomial& m) {
    return !m.zero && (m.support() & ~b.inverted) == 0;
}

inline Monomial embed(const Monomial& m, std::size_t offset, std::size_t total) {
    Monomial r(total);
    r.zero = m.zero;
    r.sign = m.sign;
    for (std::size_t i = 0; i < m.exps.size(); ++i) r.exps[offset + i] = m.exps[i];
    return r;
}

inline BlueprintPresentation tensor(const BlueprintPresentation& b, const BlueprintPresentation& c,
                                    const std::optional<BaseMaps>& base = std::nullopt) {
    if (b.size() + c.size() > static_cast<std::size_t>(kMaxGenerators))
        throw InputError("invalid_presentation", "tensor product exceeds 64 generators");
    BlueprintPresentation out;
    out.coeff_order = std::max(b.coeff_order, c.coeff_order);
    out.generator_names = b.generator_names;
    std::set<std::string> used(b.generator_names.begin(), b.generator_names.end());
    for (auto name : c.generator_names) {
        while (used.count(name)) name += "'";
        used.insert(name);
        out.generator_names.push_back(name);
    }
    const std::size_t n = out.size();
    out.inverted = b.inverted | (c.inverted << b.size());
    auto lift = [&](const FormalSum& s, std::size_t off) {
        std::vector<Monomial> t;
        for (const auto& m : s.terms) t.push_back(embed(m, off, n));
        return t;
    };
    for (const auto& r : b.relations) out.add_relation(lift(r.lhs, 0), lift(r.rhs, 0));
    for (const auto& r : c.relations) out.add_relation(lift(r.lhs, b.size()), lift(r.rhs, b.size()));
    if (base) {
        if (base->f1.size() != base->f2.size())
            throw InputError("invalid_base", "base maps have different lengths");
        for (std::size_t j = 0; j < base->f1.size(); ++j) {
            if (!is_unit_monomial(b, base->f1[j]) || !is_unit_monomial(c, base->f2[j]))
                throw InputError("invalid_base", "base map image is not a unit monomial");
            out.add_relation({embed(base->f1[j], 0, n)}, {embed(base->f2[j], b.size(), n)});
        }
    }
    out.canonicalize();
    out.validate();
    return out;
}

// Remove generators that are pinned to 0 (relation T == 0) or to 1
// (relation T == 1), substituting them everywhere.  Used to exhibit
// presentations such as unipotent radicals in their simplest form.
inline BlueprintPresentation simplify(const BlueprintPresentation& input) {
    BlueprintPresentation b = input;
    b.canonicalize();
    for (;;) {
        int target = -1;
        bool to_zero = false;
        for (const auto& r : b.relations) {
            auto single_var = [&](const FormalSum& s) -> int {
                if (s.size() != 1 || s.terms[0].sign != 0) return -1;
                const auto& e = s.terms[0].exps;
                int idx = -1;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 0) continue;
                    if (e[i] != 1 || idx >= 0) return -1;
                    idx = static_cast<int>(i);
                }
                return idx;
            };
            auto is_one = [](const FormalSum& s) {
                return s.size() == 1 && s.terms[0].sign == 0 && s.terms[0].is_constant();
            };
            int l = single_var(r.lhs), rr = single_var(r.rhs);
            if (l >= 0 && r.rhs.empty()) { target = l; to_zero = true; }
            else if (rr >= 0 && r.lhs.empty()) { target = rr; to_zero = true; }
            else if (l >= 0 && is_one(r.rhs)) { target = l; }
            else if (rr >= 0 && is_one(r.lhs)) { target = rr; }
            if (target >= 0) break;
        }
        if (target < 0) break;
        BlueprintPresentation nb;
        nb.coeff_order = b.coeff_order;
        std::vector<int> keep;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (static_cast<int>(i) != target) keep.push_back(static_cast<int>(i));
        for (std::size_t k = 0; k < keep.size(); ++k) {
            nb.generator_names.push_back(b.generator_names[keep[k]]);
            if (has_gen(b.inverted, keep[k])) nb.inverted |= gen_bit(static_cast<int>(k));
        }
        auto map_sum = [&](const FormalSum& s) {
            std::vector<Monomial> out;
            for (const auto& m : s.terms) {
                if (to_zero && m.exps[target] != 0) continue;
                Monomial t(keep.size());
                t.sign = m.sign;
                for (std::size_t k = 0; k < keep.size(); ++k) t.exps[k] = m.exps[keep[k]];
                out.push_back(t);
            }
            return out;
        };
        for (const auto& r : b.relations) {
            auto l = map_sum(r.lhs), rr = map_sum(r.rhs);
            if (l.empty() && rr.empty()) continue;
            nb.add_relation(std::move(l), std::move(rr));
        }
        nb.canonicalize();
        b = std::move(nb);
    }
    return b;
}

}  // namespace f1tits
