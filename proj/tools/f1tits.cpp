#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "f1tits/f1tits.hpp"

using namespace f1tits;

namespace {

struct Common {
    std::size_t cap = 26;
    std::size_t budget = 10000;
    unsigned long long seed = 20240101;
    std::size_t samples = 2000;
    unsigned threads = 0;
    bool pretty = false;

    SpectrumOptions spectrum() const {
        SpectrumOptions o;
        o.cap = cap;
        o.threads = threads;
        return o;
    }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--cap", c.cap, "generator cap for spectrum enumeration")->capture_default_str();
    app->add_option("--budget", c.budget, "saturation steps for relation entailment")->capture_default_str();
    app->add_option("--seed", c.seed, "random seed")->capture_default_str();
    app->add_option("--samples", c.samples, "samples per field and locus")->capture_default_str();
    app->add_option("--threads", c.threads, "worker threads (0: F1TITS_THREADS or hardware)")->capture_default_str();
    app->add_flag("--json-pretty", c.pretty, "indent JSON output");
}

void emit(const Json& j, const Common& c) { std::cout << (c.pretty ? j.dump(2) : j.dump()) << "\n"; }

SemiringValue parse_value(const Json& v, const Semiring& S) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "inf" && S.kind() == Semiring::Kind::tropical) return S.zero();
        try {
            return {BigInt(s), false};
        } catch (const std::exception&) {
            throw InputError("invalid_point", "bad semiring value '" + s + "'");
        }
    }
    if (v.is_number_integer()) return {v.get<long long>(), false};
    throw InputError("invalid_point", "semiring values must be integers or \"inf\"");
}

PointMatrix parse_matrix(const std::string& text, const std::string& aux, const GroupModel& g, const Semiring& S) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid_point", std::string("matrix JSON: ") + e.what());
    }
    if (!j.is_array()) throw InputError("invalid_point", "matrix JSON must be a row-major entry list");
    PointMatrix M;
    M.dim = g.dim;
    for (const auto& v : j) {
        if (v.is_array())
            for (const auto& w : v) M.entries.push_back(parse_value(w, S));
        else
            M.entries.push_back(parse_value(v, S));
    }
    if (!aux.empty()) {
        Json a;
        try {
            a = Json::parse(aux);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("invalid_point", std::string("aux JSON: ") + e.what());
        }
        if (!a.is_array()) a = Json::array({a});
        for (const auto& v : a) M.aux.push_back(parse_value(v, S));
    }
    for (const auto& v : M.entries)
        if (!S.valid(v)) throw InputError("invalid_point", "value " + S.format(v) + " is not in " + S.name());
    return M;
}

Json matrix_json(const PointMatrix& M, const Semiring& S) {
    Json e = Json::array(), a = Json::array();
    for (const auto& v : M.entries) e.push_back(S.format(v));
    for (const auto& v : M.aux) a.push_back(S.format(v));
    return {{"entries", e}, {"aux", a}};
}

std::vector<long long> parse_fields(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part == "Q" || part == "0") out.push_back(0);
        else if (part.size() > 1 && part[0] == 'F') out.push_back(std::stoll(part.substr(1)));
        else out.push_back(std::stoll(part));
    }
    return out;
}

Json weyl_json(const GroupModel& g, const RankSpace& rs, const WeylMonoid& w) {
    Json elements = Json::array();
    for (const auto& e : w.elements) elements.push_back(e.label);
    bool abelian = true;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = 0; b < w.size(); ++b)
            if (w.table[a][b] != w.table[b][a]) abelian = false;
    auto rk = rs.rank();
    return {{"model", g.name},
            {"rank", rk ? Json(*rk) : Json(nullptr)},
            {"order", w.size()},
            {"identity", w.identity},
            {"is_group", is_group(w.table, w.identity)},
            {"abelian", abelian},
            {"elements", elements},
            {"table", w.table}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tits-Weyl models over F1: spectra, rank spaces, Weyl and Tits laws, semiring points"};
    app.require_subcommand(1);
    Common c;
    std::string model, suite = "all", family_file, fields = "0,2,3,5", semiring = "naturals", check, aux, times,
                models_list;
    int m = 2;
    bool count = false, have_models = false;

    auto* spec = app.add_subcommand("spec", "prime spectrum as JSON");
    auto* rank = app.add_subcommand("rank-space", "minimal-rank pseudo-Hopf points");
    auto* weyl = app.add_subcommand("weyl", "Weyl monoid table induced on the rank space");
    auto* tits = app.add_subcommand("tits-points", "Tits points over F_{1^m}");
    auto* points = app.add_subcommand("points", "matrix points over a semiring");
    auto* oracle = app.add_subcommand("oracle", "realizable zero patterns of a parametrized family");
    auto* ver = app.add_subcommand("verify", "verification suites");
    auto* dot = app.add_subcommand("dot", "spectrum as a DOT digraph");
    for (auto* sub : {spec, rank, weyl, tits, dot}) {
        sub->add_option("model", model, "model selector or presentation JSON file")->required();
        add_common(sub, c);
    }
    tits->add_option("--m", m, "1 for F1, 2 for F_{1^2}")->check(CLI::Range(1, 2))->capture_default_str();
    points->add_option("model,--model", model, "matrix model selector")->required();
    points->add_option("--semiring", semiring, "naturals, B1, tropical, integers, F<p> or mod:<n>")->capture_default_str();
    points->add_option("--check", check, "row-major matrix JSON to test");
    points->add_option("--aux", aux, "values of auxiliary generators (d), JSON");
    points->add_option("--times", times, "second matrix JSON: print the product with --check");
    points->add_flag("--count", count, "exhaustive count over a finite semiring");
    add_common(points, c);
    oracle->add_option("model", model, "model selector with a built-in family (sl:2, psl2-conj, psl2-adj)");
    oracle->add_option("--family", family_file, "family file");
    oracle->add_option("--fields", fields, "characteristics to sample, e.g. 0,2,3,5")->capture_default_str();
    add_common(oracle, c);
    ver->add_option("suite", suite, "paper-counts, properties, oracle or all")->capture_default_str();
    ver->add_option("--models", models_list, "comma separated model subset for the properties suite (may be empty)")
        ->each([&](const std::string&) { have_models = true; });
    add_common(ver, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_to_json("usage", e.what()).dump() << "\n";
        return 2;
    }

    try {
        if (*spec || *dot) {
            GroupModel g = model_from_selector(model);
            std::vector<std::string> labels;
            if (g.declared) labels = g.declared->labels;
            SpectrumPoset P = poset(model_points(g, c.spectrum()));
            if (*dot) std::cout << export_dot(P, g.presentation.generator_names);
            else emit(spectrum_to_json(g, P, labels), c);
        } else if (*rank) {
            GroupModel g = model_from_selector(model);
            emit(rank_space_to_json(g, rank_space(g, c.spectrum())), c);
        } else if (*weyl) {
            GroupModel g = model_from_selector(model);
            RankSpace rs = rank_space(g, c.spectrum());
            WeylMonoid w = induced_weyl_law(rs, g.comult, g.counit, g.identity_point);
            emit(weyl_json(g, rs, w), c);
        } else if (*tits) {
            GroupModel g = model_from_selector(model);
            RankSpace rs = rank_space(g, c.spectrum());
            WeylMonoid w = induced_weyl_law(rs, g.comult, g.counit, g.identity_point);
            TitsPoints tp = tits_points(rs, w, g.comult, m);
            Json pts = Json::array();
            for (const auto& p : tp.points) {
                Json vals = Json::array();
                for (int v : p.values) vals.push_back(v ? -1 : 1);
                pts.push_back({{"rank_point", w.elements[p.rank_point].label},
                               {"units", w.elements[p.rank_point].field.unit_names},
                               {"values", vals}});
            }
            emit({{"model", g.name}, {"m", m}, {"count", tp.count()}, {"points", pts}, {"table", tp.table}}, c);
        } else if (*points) {
            GroupModel g = model_from_selector(model);
            Semiring S = Semiring::parse(semiring);
            Json out{{"model", g.name}, {"semiring", S.name()}};
            if (count) out["count"] = hom_count(g, S);
            if (!check.empty()) {
                PointMatrix M = parse_matrix(check, aux, g, S);
                out["is_point"] = is_point(g, M, S);
                if (!times.empty()) {
                    PointMatrix N = parse_matrix(times, aux, g, S);
                    PointMatrix P = multiply(g, M, N, S);
                    out["product"] = matrix_json(P, S);
                    out["product_is_point"] = is_point(g, P, S);
                }
            }
            if (!count && check.empty()) throw InputError("usage", "points needs --check <matrix JSON> or --count");
            emit(out, c);
        } else if (*oracle) {
            OracleOptions o;
            o.samples = c.samples;
            o.seed = c.seed;
            o.threads = c.threads;
            o.characteristics = parse_fields(fields);
            std::vector<ParamFamily> fams;
            if (!family_file.empty()) fams = parse_families(read_text_file(family_file));
            else if (!model.empty()) fams = builtin_families(model);
            else throw InputError("usage", "oracle needs a model with a built-in family or --family");
            PatternReport rep = realizable_patterns(fams, o);
            Json out = pattern_report_to_json(rep);
            if (!model.empty()) {
                GroupModel g = model_from_selector(model);
                auto cmp = compare_with_spectrum(g, rep, c.spectrum());
                auto bits = [&](const std::vector<GenSet>& v) {
                    Json a = Json::array();
                    for (GenSet x : v) a.push_back(bitset_string(x, rep.rows * rep.cols));
                    return a;
                };
                out["comparison"] = {{"model", g.name},
                                     {"agree", cmp.agree()},
                                     {"matched", bits(cmp.matched)},
                                     {"missing", bits(cmp.missing)},
                                     {"extra", bits(cmp.extra)}};
            }
            emit(out, c);
        } else if (*ver) {
            VerifyOptions o;
            o.spectrum = c.spectrum();
            o.oracle.samples = c.samples;
            o.oracle.seed = c.seed;
            o.oracle.threads = c.threads;
            o.seed = c.seed;
            o.budget = c.budget;
            if (have_models) {
                std::vector<std::string> ms;
                std::stringstream ss(models_list);
                std::string part;
                while (std::getline(ss, part, ','))
                    if (!part.empty()) ms.push_back(part);
                o.models = ms;
            }
            VerifyReport r = verify(suite, o);
            Json checks = Json::array();
            for (const auto& ch : r.checks)
                checks.push_back({{"suite", ch.suite},
                                  {"check", ch.name},
                                  {"expected", ch.expected},
                                  {"actual", ch.actual},
                                  {"pass", ch.pass}});
            emit({{"suite", suite}, {"passed", r.passed()}, {"checks", checks}}, c);
            return r.passed() ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cout << error_to_json(e.kind, e.what()).dump() << "\n";
        return 2;
    } catch (const ComputationError& e) {
        std::cout << error_to_json(e.kind, e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << error_to_json("internal", e.what()).dump() << "\n";
        return 1;
    }
    return 0;
}
