#pragma once

#include <deque>
#include <set>

#include "presentation.hpp"

namespace f1tits {

enum class Entailment { yes, unknown };

namespace detail {

inline std::optional<Monomial> divide(const BlueprintPresentation& b, const Monomial& t, const Monomial& s) {
    Monomial q(b.size());
    q.sign = ((t.sign - s.sign) % b.coeff_order + b.coeff_order) % b.coeff_order;
    for (std::size_t i = 0; i < b.size(); ++i) {
        q.exps[i] = t.exps[i] - s.exps[i];
        if (q.exps[i] < 0 && !has_gen(b.inverted, static_cast<int>(i))) return std::nullopt;
    }
    return q;
}

// remove the multiset `part` from `sum`; false if not contained
inline bool remove_all(std::vector<Monomial>& sum, const std::vector<Monomial>& part) {
    for (const auto& p : part) {
        auto it = std::find(sum.begin(), sum.end(), p);
        if (it == sum.end()) return false;
        sum.erase(it);
    }
    return true;
}

}  // namespace detail

// Bounded search for a derivation of r: starting from r.lhs, repeatedly
// replace a sub-sum m*a by m*b for a relation a == b of B (in either
// direction); with coefficient order 2 also cancel pairs m + (-m).  Each
// rewrite costs one step.  "yes" is always backed by such a derivation.
inline Entailment relation_entailed(const BlueprintPresentation& b, const Relation& target, std::size_t budget = 10000) {
    Relation r = target;
    r.canonicalize();
    if (r.trivial()) return Entailment::yes;
    // rules rewrite nonempty sums only, so search from the nonempty side
    if (r.lhs.empty()) std::swap(r.lhs, r.rhs);
    std::vector<std::pair<const FormalSum*, const FormalSum*>> rules;
    for (const auto& rel : b.relations) {
        if (!rel.lhs.empty()) rules.push_back({&rel.lhs, &rel.rhs});
        if (!rel.rhs.empty()) rules.push_back({&rel.rhs, &rel.lhs});
    }
    std::set<FormalSum> seen{r.lhs};
    std::deque<FormalSum> queue{r.lhs};
    std::size_t steps = 0;
    auto visit = [&](std::vector<Monomial> next) -> bool {
        FormalSum s(std::move(next));
        ++steps;
        if (s == r.rhs) return true;
        if (seen.insert(s).second) queue.push_back(std::move(s));
        return false;
    };
    while (!queue.empty() && steps < budget) {
        FormalSum cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& [from, to] : rules) {
            std::set<Monomial> tried;
            for (const auto& t : cur.terms) {
                auto m = detail::divide(b, t, from->terms[0]);
                if (!m || !tried.insert(*m).second) continue;
                std::vector<Monomial> rest = cur.terms;
                std::vector<Monomial> part;
                for (const auto& f : from->terms) part.push_back(multiply(f, *m, b.coeff_order));
                if (!detail::remove_all(rest, part)) continue;
                for (const auto& g : to->terms) rest.push_back(multiply(g, *m, b.coeff_order));
                if (visit(std::move(rest))) return Entailment::yes;
                if (steps >= budget) return Entailment::unknown;
            }
        }
        if (b.coeff_order == 2) {
            for (std::size_t i = 0; i < cur.terms.size(); ++i) {
                Monomial neg = cur.terms[i];
                neg.sign ^= 1;
                auto it = std::find(cur.terms.begin() + static_cast<long>(i) + 1, cur.terms.end(), neg);
                if (it == cur.terms.end()) continue;
                std::vector<Monomial> rest = cur.terms;
                rest.erase(rest.begin() + (it - cur.terms.begin()));
                rest.erase(rest.begin() + static_cast<long>(i));
                if (visit(std::move(rest))) return Entailment::yes;
                if (steps >= budget) return Entailment::unknown;
            }
        }
    }
    return Entailment::unknown;
}

}  // namespace f1tits
