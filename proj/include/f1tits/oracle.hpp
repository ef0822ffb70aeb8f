#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "expr.hpp"
#include "group_model.hpp"
#include "spectrum.hpp"

namespace f1tits {

struct Constraint {
    ExprPtr lhs, rhs;
    bool equality = true;
    std::string text;
};

struct Locus {
    std::string name;
    std::vector<Constraint> constraints;
};

struct ParamFamily {
    std::string name;
    std::vector<std::string> params;
    std::vector<Constraint> constraints;
    std::vector<std::vector<ExprPtr>> matrix;
    std::vector<std::vector<std::string>> matrix_text;
    std::vector<Locus> loci;

    std::size_t rows() const { return matrix.size(); }
    std::size_t cols() const { return matrix.empty() ? 0 : matrix[0].size(); }
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// split at top-level separators (outside parentheses and brackets)
inline std::vector<std::pair<std::string, std::size_t>> split_top(const std::string& s, const std::string& seps,
                                                                  std::size_t offset) {
    std::vector<std::pair<std::string, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        char c = i < s.size() ? s[i] : seps[0];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if ((depth == 0 && seps.find(c) != std::string::npos) || i == s.size()) {
            std::string part = s.substr(start, i - start);
            std::size_t lead = part.find_first_not_of(" \t\r\n");
            if (lead != std::string::npos) out.push_back({trim(part), offset + start + lead});
            start = i + 1;
        }
    }
    return out;
}

inline Constraint parse_constraint(const std::string& text, const std::vector<std::string>& params, std::size_t offset) {
    Constraint c;
    c.text = text;
    auto ne = text.find("!=");
    std::size_t split = ne;
    if (ne == std::string::npos) {
        split = text.find('=');
        if (split == std::string::npos) throw ParseError("constraint needs '=' or '!='", offset);
        c.equality = true;
    } else {
        c.equality = false;
    }
    std::size_t rhs_start = split + (c.equality ? 1 : 2);
    c.lhs = parse_expr(text.substr(0, split), params, offset);
    c.rhs = parse_expr(text.substr(rhs_start), params, offset + rhs_start);
    return c;
}

inline std::vector<Constraint> parse_constraint_list(const std::string& text, const std::vector<std::string>& params,
                                                     std::size_t offset) {
    std::vector<Constraint> out;
    for (auto& [part, pos] : split_top(text, ",;", offset)) out.push_back(parse_constraint(part, params, pos));
    return out;
}

}  // namespace detail

// Text format, one key per line (the matrix may span lines):
//   name: <name>
//   params: a, b, c, d
//   constraints: a*d - b*c = 1, lambda != 0
//   matrix: [[expr, ...], ...]
//   loci: <name> { constraint; ... }   (further loci on following lines)
// Several families are separated by a line "---".
inline std::vector<ParamFamily> parse_families(const std::string& text) {
    std::vector<ParamFamily> out;
    ParamFamily cur;
    bool have = false;
    std::string pending_key, pending;
    std::size_t pending_pos = 0;
    bool in_loci = false;

    auto finish_matrix = [&]() {
        std::string body = detail::trim(pending);
        auto lead = pending.find_first_not_of(" \t\r\n");
        if (lead != std::string::npos) pending_pos += lead;
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw ParseError("matrix must be written as [[...],...]", pending_pos);
        auto rows = detail::split_top(body.substr(1, body.size() - 2), ",", pending_pos + 1);
        for (auto& [row, rpos] : rows) {
            if (row.size() < 2 || row.front() != '[' || row.back() != ']') throw ParseError("matrix row must be [...]", rpos);
            std::vector<ExprPtr> r;
            std::vector<std::string> rt;
            for (auto& [entry, epos] : detail::split_top(row.substr(1, row.size() - 2), ",", rpos + 1)) {
                r.push_back(parse_expr(entry, cur.params, epos));
                rt.push_back(entry);
            }
            if (!cur.matrix.empty() && r.size() != cur.matrix[0].size())
                throw ParseError("matrix rows have different lengths", rpos);
            cur.matrix.push_back(std::move(r));
            cur.matrix_text.push_back(std::move(rt));
        }
        if (cur.matrix.empty()) throw ParseError("empty matrix", pending_pos);
        pending_key.clear();
        pending.clear();
    };
    auto parse_locus = [&](const std::string& line, std::size_t pos) {
        auto open = line.find('{'), close = line.rfind('}');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw ParseError("locus must be written as name { constraints }", pos);
        Locus l;
        l.name = detail::trim(line.substr(0, open));
        if (l.name.empty()) throw ParseError("locus without a name", pos);
        l.constraints = detail::parse_constraint_list(line.substr(open + 1, close - open - 1), cur.params, pos + open + 1);
        cur.loci.push_back(std::move(l));
    };
    auto close_family = [&]() {
        if (!pending_key.empty()) finish_matrix();
        if (!have) return;
        if (cur.matrix.empty()) throw InputError("syntax_error", "family '" + cur.name + "' has no matrix");
        out.push_back(std::move(cur));
        cur = ParamFamily{};
        have = false;
        in_loci = false;
    };

    std::size_t pos = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        const std::size_t line_pos = pos;
        pos += raw.size() + 1;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line == "---") {
            close_family();
            continue;
        }
        if (!pending_key.empty()) {
            pending += " " + line;
            int depth = 0;
            for (char c : pending) depth += (c == '[') - (c == ']');
            if (depth == 0) finish_matrix();
            continue;
        }
        auto colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : detail::trim(line.substr(0, colon));
        const bool keyword = key == "name" || key == "params" || key == "constraints" || key == "matrix" || key == "loci";
        if (!keyword) {
            if (in_loci) {
                parse_locus(line, line_pos + raw.find_first_not_of(" \t"));
                continue;
            }
            throw ParseError("expected one of name/params/constraints/matrix/loci", line_pos);
        }
        have = true;
        in_loci = false;
        std::string value = line.substr(colon + 1);
        std::size_t vpos = line_pos + raw.find(':') + 1;
        if (key == "name") cur.name = detail::trim(value);
        else if (key == "params") {
            for (auto& [p, ppos] : detail::split_top(value, ",", vpos)) {
                if (p.empty() || !(std::isalpha(static_cast<unsigned char>(p[0])) || p[0] == '_'))
                    throw ParseError("invalid parameter name '" + p + "'", ppos);
                cur.params.push_back(p);
            }
        } else if (key == "constraints") {
            auto cs = detail::parse_constraint_list(value, cur.params, vpos);
            cur.constraints.insert(cur.constraints.end(), cs.begin(), cs.end());
        } else if (key == "matrix") {
            pending_key = key;
            pending = value;
            pending_pos = vpos;
            int depth = 0;
            for (char c : pending) depth += (c == '[') - (c == ']');
            if (depth == 0) finish_matrix();
        } else {
            in_loci = true;
            if (!detail::trim(value).empty()) parse_locus(detail::trim(value), vpos);
        }
    }
    if (!pending_key.empty()) throw ParseError("unterminated matrix", pending_pos);
    close_family();
    if (out.empty()) throw InputError("syntax_error", "no family found");
    return out;
}

inline ParamFamily parse_family(const std::string& text) {
    auto fams = parse_families(text);
    if (fams.size() != 1) throw InputError("syntax_error", "expected exactly one family");
    return fams[0];
}

struct Witness {
    std::string family;
    std::string locus;  // empty for unconstrained sampling
    std::string field;
    long long characteristic = 0;
    std::vector<long long> modulus;  // defining polynomial of an extension field
    std::vector<std::string> values;  // parameter values in declaration order
};

struct PatternEntry {
    std::set<long long> characteristics;
    std::vector<Witness> witnesses;  // first witness per field
};

struct PatternReport {
    std::size_t rows = 0, cols = 0;
    std::map<GenSet, PatternEntry, decltype(&bitset_less)> patterns{&bitset_less};
    std::vector<std::string> warnings;
    unsigned long long seed = 0;
    std::size_t samples = 0;
};

struct OracleOptions {
    std::vector<long long> characteristics{0, 2, 3, 5};
    std::size_t samples = 2000;
    unsigned long long seed = 20240101;
    unsigned threads = 0;
    long long min_field_size = 16;
};

namespace detail {

struct SolvePlan {
    std::vector<int> free_vars;
    std::vector<std::pair<int, int>> steps;  // (constraint index, solved variable)
    std::vector<int> check_only;
};

// Choose for each equality a parameter occurring linearly, solvable once the
// remaining parameters are known; equalities without such a choice are only
// checked (rejection sampling).  All plans solving the maximal number of
// equalities are returned, since a plan may degenerate on a locus.
inline std::vector<SolvePlan> make_plans(std::size_t nparams, const std::vector<const Constraint*>& cons,
                                         std::size_t limit = 64) {
    std::vector<int> eqs;
    for (std::size_t i = 0; i < cons.size(); ++i)
        if (cons[i]->equality) eqs.push_back(static_cast<int>(i));
    std::vector<std::vector<int>> linear(cons.size());
    std::vector<GenSet> occurs(cons.size(), 0);
    for (int i : eqs)
        for (std::size_t v = 0; v < nparams; ++v) {
            auto dl = degree_in(*cons[i]->lhs, static_cast<int>(v)), dr = degree_in(*cons[i]->rhs, static_cast<int>(v));
            long long d = (!dl || !dr) ? -1 : std::max(*dl, *dr);
            if (d != 0) occurs[i] |= gen_bit(static_cast<int>(v));
            if (d == 1) linear[i].push_back(static_cast<int>(v));
        }
    std::vector<SolvePlan> plans;
    std::size_t best_solved = 0;
    std::function<void(std::size_t, GenSet, std::vector<std::pair<int, int>>&)> search =
        [&](std::size_t k, GenSet chosen, std::vector<std::pair<int, int>>& steps) {
            if (plans.size() >= limit && best_solved == eqs.size()) return;
            if (k == eqs.size()) {
                if (steps.size() < best_solved) return;
                // order: solve when all other occurring variables are known
                GenSet known = 0;
                for (std::size_t v = 0; v < nparams; ++v)
                    if (!has_gen(chosen, static_cast<int>(v))) known |= gen_bit(static_cast<int>(v));
                std::vector<std::pair<int, int>> order, rest = steps;
                bool progress = true;
                while (!rest.empty() && progress) {
                    progress = false;
                    for (auto it = rest.begin(); it != rest.end(); ++it) {
                        GenSet need = occurs[it->first] & ~gen_bit(it->second);
                        if ((need & ~known) == 0) {
                            known |= gen_bit(it->second);
                            order.push_back(*it);
                            rest.erase(it);
                            progress = true;
                            break;
                        }
                    }
                }
                if (!rest.empty()) return;
                if (steps.size() > best_solved) {
                    plans.clear();
                    best_solved = steps.size();
                }
                SolvePlan plan;
                plan.steps = order;
                for (std::size_t v = 0; v < nparams; ++v)
                    if (!has_gen(chosen, static_cast<int>(v))) plan.free_vars.push_back(static_cast<int>(v));
                std::set<int> solved;
                for (auto& st : order) solved.insert(st.first);
                for (int i : eqs)
                    if (!solved.count(i)) plan.check_only.push_back(i);
                if (plans.size() < limit) plans.push_back(std::move(plan));
                return;
            }
            int i = eqs[k];
            for (int v : linear[i]) {
                if (has_gen(chosen, v)) continue;
                steps.push_back({i, v});
                search(k + 1, chosen | gen_bit(v), steps);
                steps.pop_back();
            }
            search(k + 1, chosen, steps);
        };
    std::vector<std::pair<int, int>> steps;
    search(0, 0, steps);
    return plans;
}

template <class F>
std::optional<std::vector<typename F::value_type>> sample_once(const F& f, std::size_t nparams,
                                                               const std::vector<const Constraint*>& cons,
                                                               const SolvePlan& plan, std::mt19937_64& rng) {
    using V = typename F::value_type;
    std::vector<V> x(nparams, f.zero());
    for (int v : plan.free_vars) x[v] = f.random(rng);
    for (auto [ci, v] : plan.steps) {
        const Constraint& c = *cons[ci];
        x[v] = f.zero();
        auto l0 = evaluate(f, *c.lhs, x), r0 = evaluate(f, *c.rhs, x);
        x[v] = f.one();
        auto l1 = evaluate(f, *c.lhs, x), r1 = evaluate(f, *c.rhs, x);
        if (!l0 || !r0 || !l1 || !r1) return std::nullopt;
        V beta = f.sub(*l0, *r0), alpha = f.sub(f.sub(*l1, *r1), beta);
        auto inv = f.inverse(alpha);
        if (!inv) return std::nullopt;
        x[v] = f.neg(f.mul(beta, *inv));
    }
    for (const auto* c : cons) {
        auto l = evaluate(f, *c->lhs, x), r = evaluate(f, *c->rhs, x);
        if (!l || !r) return std::nullopt;
        bool eq = f.is_zero(f.sub(*l, *r));
        if (eq != c->equality) return std::nullopt;
    }
    return x;
}

template <class F>
std::optional<GenSet> zero_pattern(const F& f, const ParamFamily& fam, const std::vector<typename F::value_type>& x) {
    GenSet pat = 0;
    for (std::size_t i = 0; i < fam.rows(); ++i)
        for (std::size_t j = 0; j < fam.cols(); ++j) {
            auto v = evaluate(f, *fam.matrix[i][j], x);
            if (!v) return std::nullopt;
            if (f.is_zero(*v)) pat |= gen_bit(static_cast<int>(i * fam.cols() + j));
        }
    return pat;
}

struct CellResult {
    std::vector<std::pair<GenSet, Witness>> found;  // in discovery order
    std::optional<std::string> warning;
};

template <class F>
CellResult run_cell(const F& f, const ParamFamily& fam, const Locus* locus, std::size_t samples,
                    unsigned long long seed) {
    CellResult out;
    std::vector<const Constraint*> cons;
    for (const auto& c : fam.constraints) cons.push_back(&c);
    if (locus)
        for (const auto& c : locus->constraints) cons.push_back(&c);
    std::vector<SolvePlan> plans = make_plans(fam.params.size(), cons);
    std::mt19937_64 rng(seed);
    std::set<GenSet> seen;
    std::size_t valid = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        auto x = sample_once(f, fam.params.size(), cons, plans[s % plans.size()], rng);
        if (!x) continue;
        auto pat = zero_pattern(f, fam, *x);
        if (!pat) continue;
        ++valid;
        if (!seen.insert(*pat).second) continue;
        Witness w;
        w.family = fam.name;
        w.locus = locus ? locus->name : "";
        w.field = f.tag();
        w.characteristic = f.characteristic();
        if constexpr (std::is_same_v<F, FiniteField>) {
            if (f.degree() > 1) w.modulus = f.modulus();
        }
        for (const auto& v : *x) w.values.push_back(f.format(v));
        out.found.push_back({*pat, std::move(w)});
    }
    if (valid == 0)
        out.warning = "no sample satisfied the constraints of family '" + fam.name + "'" +
                      (locus ? " on locus '" + locus->name + "'" : "") + " over " + f.tag();
    return out;
}

}  // namespace detail

inline std::variant<RationalField, FiniteField> sampling_field(long long characteristic, long long min_size) {
    if (characteristic == 0) return RationalField{};
    return FiniteField::at_least(characteristic, min_size);
}

// Lower bound on the realizable zero patterns of the families: random
// samples per (family, field, locus) cell, the unconstrained locus included.
inline PatternReport realizable_patterns(const std::vector<ParamFamily>& families, const OracleOptions& opt = {}) {
    if (opt.samples < 1) throw InputError("invalid_argument", "samples must be at least 1");
    PatternReport rep;
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (const auto& fam : families) {
        if (fam.rows() * fam.cols() > static_cast<std::size_t>(kMaxGenerators))
            throw InputError("cap_exceeded", "matrix has more than 64 entries");
        if (rep.rows == 0) {
            rep.rows = fam.rows();
            rep.cols = fam.cols();
        } else if (rep.rows != fam.rows() || rep.cols != fam.cols()) {
            throw InputError("invalid_family", "families have different matrix shapes");
        }
    }
    struct Cell {
        const ParamFamily* fam;
        const Locus* locus;
        long long characteristic;
    };
    std::vector<Cell> cells;
    for (const auto& fam : families)
        for (long long p : opt.characteristics) {
            cells.push_back({&fam, nullptr, p});
            for (const auto& l : fam.loci) cells.push_back({&fam, &l, p});
        }
    std::vector<detail::CellResult> results(cells.size());
    auto run = [&](std::size_t k) {
        auto field = sampling_field(cells[k].characteristic, opt.min_field_size);
        unsigned long long seed = opt.seed ^ (0x9E3779B97F4A7C15ULL * (k + 1));
        results[k] = std::visit(
            [&](const auto& f) { return detail::run_cell(f, *cells[k].fam, cells[k].locus, opt.samples, seed); }, field);
    };
    const unsigned threads = std::min<unsigned>(resolve_threads(opt.threads), static_cast<unsigned>(cells.size()));
    if (threads <= 1) {
        for (std::size_t k = 0; k < cells.size(); ++k) run(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t k; (k = next++) < cells.size();) run(k);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (auto& r : results) {
        if (r.warning) rep.warnings.push_back(*r.warning);
        for (auto& [pat, w] : r.found) {
            auto& entry = rep.patterns[pat];
            entry.characteristics.insert(w.characteristic);
            bool have_field = false;
            for (const auto& old : entry.witnesses)
                if (old.field == w.field) have_field = true;
            if (!have_field) entry.witnesses.push_back(w);
        }
    }
    return rep;
}

inline PatternReport realizable_patterns(const ParamFamily& fam, const OracleOptions& opt = {}) {
    return realizable_patterns(std::vector<ParamFamily>{fam}, opt);
}

// Re-evaluate a witness: constraints hold and the zero pattern is as claimed.
inline bool check_witness(const ParamFamily& fam, const Witness& w, GenSet pattern) {
    std::vector<const Constraint*> cons;
    for (const auto& c : fam.constraints) cons.push_back(&c);
    for (const auto& l : fam.loci)
        if (l.name == w.locus)
            for (const auto& c : l.constraints) cons.push_back(&c);
    if (!w.locus.empty() && cons.size() == fam.constraints.size()) {
        bool has_locus = false;
        for (const auto& l : fam.loci)
            if (l.name == w.locus) has_locus = true;
        if (!has_locus) return false;
    }
    if (w.values.size() != fam.params.size()) return false;
    auto check = [&](const auto& f) {
        std::vector<typename std::decay_t<decltype(f)>::value_type> x;
        for (const auto& s : w.values) x.push_back(f.parse(s));
        for (const auto* c : cons) {
            auto l = evaluate(f, *c->lhs, x), r = evaluate(f, *c->rhs, x);
            if (!l || !r) return false;
            if (f.is_zero(f.sub(*l, *r)) != c->equality) return false;
        }
        auto pat = detail::zero_pattern(f, fam, x);
        return pat && *pat == pattern;
    };
    if (w.characteristic == 0) return check(RationalField{});
    int k = w.modulus.empty() ? 1 : static_cast<int>(w.modulus.size()) - 1;
    FiniteField f(w.characteristic, k);
    if (k > 1 && f.modulus() != w.modulus) return false;
    return check(f);
}

// Zero-position set of a spectrum point of a matrix model.
inline GenSet point_pattern(const GroupModel& g, GenSet vars) {
    GenSet pat = 0;
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j) {
            int idx = g.entry_generator[i][j];
            if (idx >= 0 && has_gen(vars, idx)) pat |= gen_bit(static_cast<int>(i * g.dim + j));
        }
    return pat;
}

struct SpectrumComparison {
    std::vector<GenSet> matched, missing, extra;  // missing: point without pattern; extra: pattern without point
    bool agree() const { return missing.empty() && extra.empty(); }
};

inline std::vector<PrimePoint> model_points(const GroupModel& g, const SpectrumOptions& opt = {}) {
    if (g.declared) return g.declared->points;
    return enumerate_primes(g.presentation, opt);
}

inline SpectrumComparison compare_with_spectrum(const GroupModel& g, const PatternReport& rep,
                                                const SpectrumOptions& opt = {}) {
    if (g.dim == 0 || rep.rows != g.dim || rep.cols != g.dim)
        throw InputError("invalid_family", "pattern shape does not match model " + g.name);
    std::set<GenSet> pts;
    for (const auto& p : model_points(g, opt)) pts.insert(point_pattern(g, p.vars));
    SpectrumComparison c;
    for (GenSet p : pts) (rep.patterns.count(p) ? c.matched : c.missing).push_back(p);
    for (const auto& [p, e] : rep.patterns)
        if (!pts.count(p)) c.extra.push_back(p);
    auto by = [](GenSet a, GenSet b) { return bitset_less(a, b); };
    std::sort(c.matched.begin(), c.matched.end(), by);
    std::sort(c.missing.begin(), c.missing.end(), by);
    std::sort(c.extra.begin(), c.extra.end(), by);
    return c;
}

namespace families {

inline const char* sl2 = R"(name: sl2
params: a, b, c, d
constraints: a*d - b*c = 1
matrix: [[a, b], [c, d]]
loci:
  a=0 { a = 0 }
  b=0 { b = 0 }
  c=0 { c = 0 }
  d=0 { d = 0 }
  a=d=0 { a = 0; d = 0 }
  b=c=0 { b = 0; c = 0 }
)";

inline const char* psl2_conj = R"(name: psl2-conj
params: a, b, c, d
constraints: a*d - b*c = 1
matrix: [[a*d, -a*c, b*d, -b*c],
         [-a*b, a^2, -b^2, a*b],
         [c*d, -c^2, d^2, -c*d],
         [-b*c, a*c, -b*d, a*d]]
loci:
  a=0 { a = 0 }
  b=0 { b = 0 }
  c=0 { c = 0 }
  d=0 { d = 0 }
  a=d=0 { a = 0; d = 0 }
  b=c=0 { b = 0; c = 0 }
)";

inline const char* psl2_adjoint = R"(name: psl2-adj-borel
params: lambda, t
constraints: lambda != 0
matrix: [[lambda^-2, lambda^-2*t, -lambda^-2*t^2],
         [0, 1, -2*t],
         [0, 0, lambda^2]]
loci:
  t=0 { t = 0 }
---
name: psl2-adj-big
params: lambda, s, t
constraints: lambda != 0
matrix: [[lambda^-2*s^2, -s + lambda^-2*t*s^2, -lambda^2 + 2*s*t - lambda^-2*s^2*t^2],
         [2*lambda^-2*s, -1 + 2*lambda^-2*s*t, 2*t - 2*lambda^-2*s*t^2],
         [-lambda^-2, -lambda^-2*t, lambda^-2*t^2]]
loci:
  s=t=0 { s = 0; t = 0 }
  s=0 { s = 0 }
  t=0 { t = 0 }
  st=lambda^2 { s*t = lambda^2 }
  2st=lambda^2 { 2*s*t = lambda^2 }
)";

}  // namespace families

inline std::vector<ParamFamily> builtin_families(const std::string& name) {
    if (name == "sl:2" || name == "sl2") return parse_families(families::sl2);
    if (name == "psl2-conj") return parse_families(families::psl2_conj);
    if (name == "psl2-adj") return parse_families(families::psl2_adjoint);
    throw InputError("unknown_model", "no built-in family for '" + name + "'");
}

}  // namespace f1tits
