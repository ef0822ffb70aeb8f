#pragma once

#include <random>
#include <string>
#include <vector>

#include "entailment.hpp"
#include "oracle.hpp"
#include "selector.hpp"
#include "semiring.hpp"
#include "tits.hpp"

namespace f1tits {

struct Check {
    std::string suite, name, expected, actual;
    bool pass = false;
};

struct VerifyReport {
    std::vector<Check> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    SpectrumOptions spectrum;
    OracleOptions oracle;
    std::optional<std::vector<std::string>> models;  // properties suite subset
    unsigned long long seed = 20240101;
    std::size_t budget = 10000;
};

namespace detail {

template <class A, class B>
void record(VerifyReport& r, const std::string& suite, const std::string& name, const A& expected, const B& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    r.checks.push_back({suite, name, e.str(), a.str(), e.str() == a.str()});
}

inline void record_error(VerifyReport& r, const std::string& suite, const std::string& name, const std::exception& ex) {
    r.checks.push_back({suite, name, "no error", std::string("error: ") + ex.what(), false});
}

// plain prime criterion, every subset
inline std::vector<GenSet> subset_scan(const BlueprintPresentation& b) {
    std::vector<GenSet> out;
    const std::size_t n = b.size();
    for (GenSet I = 0; I < (GenSet{1} << n); ++I)
        if (is_prime(b, I)) out.push_back(I);
    std::sort(out.begin(), out.end(), [](GenSet x, GenSet y) { return bitset_less(x, y); });
    return out;
}

}  // namespace detail

inline void verify_paper_counts(VerifyReport& r, const VerifyOptions& opt) {
    const std::string suite = "paper-counts";
    auto guard = [&](const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            detail::record_error(r, suite, name, e);
        }
    };
    guard("sl:2 spectrum", [&] { detail::record(r, suite, "sl:2 spectrum size", 7, enumerate_primes(sl(2).presentation, opt.spectrum).size()); });
    guard("A2 spectrum", [&] { detail::record(r, suite, "A^2 spectrum size", 4, enumerate_primes(mk_free(2), opt.spectrum).size()); });
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> models{
        {"sl:2", {1, 2}}, {"sl:3", {2, 6}},  {"sl:4", {3, 24}}, {"gl:1", {1, 1}}, {"gl:2", {2, 2}},
        {"gl:3", {3, 6}}, {"sp:2", {1, 2}},  {"sp:4", {2, 8}},  {"so:3", {1, 2}}, {"so:4", {2, 4}},
        {"o:4", {2, 8}},  {"so:5", {2, 8}},  {"torus:2", {2, 1}}, {"nstorus", {1, 1}}, {"psl2-conj", {1, 2}},
        {"psl2-adj", {1, 2}}, {"const:Z2", {0, 2}}, {"parabolic:2:1,1", {2, 1}}};
    for (const auto& [sel, want] : models)
        guard(sel, [&] {
            GroupModel g = model_from_selector(sel);
            RankSpace rs = rank_space(g, opt.spectrum);
            WeylMonoid w = induced_weyl_law(rs, g.comult, g.counit, g.identity_point);
            auto rk = rs.rank();
            detail::record(r, suite, sel + " rank", want.first, rk ? std::to_string(*rk) : "mixed");
            detail::record(r, suite, sel + " |W|", want.second, w.size());
            detail::record(r, suite, sel + " W is a group", true, is_group(w.table, w.identity));
        });
    for (std::size_t n = 2; n <= 4; ++n)
        guard("sl tits", [&] {
            GroupModel g = sl(n);
            RankSpace rs = rank_space(g, opt.spectrum);
            WeylMonoid w = induced_weyl_law(rs, g.comult, g.counit, g.identity_point);
            std::size_t f = detail::factorial(n);
            detail::record(r, suite, "sl:" + std::to_string(n) + " |G(F1)|", f / 2, tits_points(rs, w, g.comult, 1).count());
            detail::record(r, suite, "sl:" + std::to_string(n) + " |G(F1^2)|", (std::size_t{1} << (n - 1)) * f,
                           tits_points(rs, w, g.comult, 2).count());
        });
    for (std::size_t n = 1; n <= 3; ++n)
        guard("gl tits", [&] {
            detail::record(r, suite, "gl:" + std::to_string(n) + " |G(F1^2)|",
                           (std::size_t{1} << n) * detail::factorial(n), tits_points(gl(n), 2, opt.spectrum).count());
        });
    guard("psl2-adj points", [&] { detail::record(r, suite, "psl2-adj spectrum size", 13, psl2_adjoint().declared->points.size()); });
    guard("psl2-conj points", [&] { detail::record(r, suite, "psl2-conj spectrum size", 7, psl2_conj().declared->points.size()); });
    guard("nstorus", [&] {
        GroupModel g = nonstandard_torus();
        detail::record(r, suite, "nstorus spectrum size", 2, enumerate_primes(g.presentation, opt.spectrum).size());
        detail::record(r, suite, "nstorus F1-points", 0, f1_points(g.presentation).size());
    });
    guard("unipotent", [&] {
        GroupModel u = unipotent_radical(3, {1, 1, 1});
        auto ph = pseudo_hopf_points(u.presentation, opt.spectrum);
        std::size_t certified = 0;
        for (const auto& p : ph)
            if (p.status == HopfStatus::certified) ++certified;
        detail::record(r, suite, "unipotent:3 pseudo-Hopf points", 1, certified);
        detail::record(r, suite, "unipotent:3 is A^3", true, u.presentation == mk_free(3, 0, 1) ||
                                                                (u.presentation.relations.empty() && u.presentation.size() == 3 &&
                                                                 u.presentation.inverted == 0));
    });
    guard("hom_count", [&] { detail::record(r, suite, "hom_count(sl:2, F2)", 6, hom_count(sl(2), Semiring::modular(2))); });
}

inline std::vector<std::string> default_property_models() {
    return {"sl:2", "sl:3", "gl:2", "gl:3", "sp:2", "so:3", "so:4", "o:4", "torus:2", "nstorus",
            "const:Z2", "const:Z3", "parabolic:3:2,1", "levi:3:2,1", "unipotent:3:1,1,1"};
}

inline void verify_properties(VerifyReport& r, const VerifyOptions& opt) {
    const std::string suite = "properties";
    const auto models = opt.models.value_or(default_property_models());
    std::mt19937_64 rng(opt.seed);
    for (const auto& sel : models) {
        try {
            GroupModel g = model_from_selector(sel);
            std::vector<PrimePoint> pts = model_points(g, opt.spectrum);
            SpectrumPoset P = poset(pts);
            detail::record(r, suite, sel + " sober", true, sobriety_check(P));
            if (!g.declared && g.presentation.size() <= 16) {
                auto scan = detail::subset_scan(g.presentation);
                std::vector<GenSet> got;
                for (const auto& p : pts) got.push_back(p.vars);
                detail::record(r, suite, sel + " enumeration = subset scan", true, scan == got);
            }
            bool entailed = true;
            const auto& b = g.presentation;
            for (const auto& rel : b.relations) {
                if (b.size() == 0) break;
                Monomial t = b.var(0);
                Relation m{scale(rel.lhs, t, b.coeff_order), scale(rel.rhs, t, b.coeff_order)};
                m.canonicalize();
                if (relation_entailed(b, m, opt.budget) != Entailment::yes) entailed = false;
            }
            detail::record(r, suite, sel + " relation multiples entailed", true, entailed);
            RankSpace rs = rank_space(g, opt.spectrum);
            WeylMonoid w = induced_weyl_law(rs, g.comult, g.counit, g.identity_point);
            detail::record(r, suite, sel + " law associative", true, is_associative(w.table));
            detail::record(r, suite, sel + " identity is a rank point", true, w.identity >= 0);
            if (g.expected.rank && rs.rank()) detail::record(r, suite, sel + " expected rank", *g.expected.rank, *rs.rank());
            if (g.expected.weyl_order) detail::record(r, suite, sel + " expected |W|", *g.expected.weyl_order, w.size());
            if (g.dim >= 1 && g.dim <= 3 && g.entry_generator.size() == g.dim) {
                for (const auto& S : {Semiring::naturals(), Semiring::boolean(), Semiring::tropical()}) {
                    auto pts_s = sample_points(g, S, 20, rng);
                    bool closed = !pts_s.empty();
                    for (std::size_t k = 0; k + 1 < pts_s.size(); ++k)
                        if (!is_point(g, multiply(g, pts_s[k], pts_s[k + 1], S), S)) closed = false;
                    detail::record(r, suite, sel + " closure over " + S.name(), true, closed);
                }
            }
        } catch (const std::exception& e) {
            detail::record_error(r, suite, sel, e);
        }
    }
}

inline void verify_oracle(VerifyReport& r, const VerifyOptions& opt) {
    const std::string suite = "oracle";
    for (const std::string sel : {"sl:2", "psl2-conj", "psl2-adj"}) {
        try {
            GroupModel g = model_from_selector(sel);
            auto fams = builtin_families(sel);
            PatternReport rep = realizable_patterns(fams, opt.oracle);
            auto cmp = compare_with_spectrum(g, rep, opt.spectrum);
            detail::record(r, suite, sel + " missing patterns", 0, cmp.missing.size());
            detail::record(r, suite, sel + " extra patterns", 0, cmp.extra.size());
            bool witnesses_ok = true;
            for (const auto& [p, e] : rep.patterns)
                for (const auto& w : e.witnesses) {
                    const ParamFamily* fam = nullptr;
                    for (const auto& f : fams)
                        if (f.name == w.family) fam = &f;
                    if (!fam || !check_witness(*fam, w, p)) witnesses_ok = false;
                }
            detail::record(r, suite, sel + " witnesses re-evaluate", true, witnesses_ok);
        } catch (const std::exception& e) {
            detail::record_error(r, suite, sel, e);
        }
    }
}

inline VerifyReport verify(const std::string& suite, const VerifyOptions& opt = {}) {
    VerifyReport r;
    if (suite == "paper-counts") verify_paper_counts(r, opt);
    else if (suite == "properties") verify_properties(r, opt);
    else if (suite == "oracle") verify_oracle(r, opt);
    else if (suite == "all") {
        verify_paper_counts(r, opt);
        verify_properties(r, opt);
        verify_oracle(r, opt);
    } else {
        throw InputError("unknown_suite", "suite must be one of paper-counts, properties, oracle, all");
    }
    return r;
}

}  // namespace f1tits
