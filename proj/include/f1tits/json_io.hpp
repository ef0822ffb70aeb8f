#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "catalog.hpp"
#include "oracle.hpp"
#include "tits.hpp"

namespace f1tits {

using Json = nlohmann::ordered_json;

inline Json monomial_to_json(const Monomial& m) { return Json::array({m.sign, m.exps}); }

inline Json presentation_to_json(const BlueprintPresentation& b) {
    Json j;
    j["generators"] = b.generator_names;
    Json inv = Json::array();
    for (std::size_t i = 0; i < b.size(); ++i)
        if (has_gen(b.inverted, static_cast<int>(i))) inv.push_back(b.generator_names[i]);
    j["inverted"] = inv;
    j["coeff_order"] = b.coeff_order;
    Json rels = Json::array();
    for (const auto& r : b.relations) {
        Json lhs = Json::array(), rhs = Json::array();
        for (const auto& t : r.lhs.terms) lhs.push_back(monomial_to_json(t));
        for (const auto& t : r.rhs.terms) rhs.push_back(monomial_to_json(t));
        rels.push_back({{"lhs", lhs}, {"rhs", rhs}});
    }
    j["relations"] = rels;
    return j;
}

namespace detail {

inline int generator_ref(const Json& v, const std::vector<std::string>& names) {
    if (v.is_number_integer()) {
        long long i = v.get<long long>();
        if (i < 0 || i >= static_cast<long long>(names.size()))
            throw InputError("invalid_presentation", "generator index out of range");
        return static_cast<int>(i);
    }
    if (v.is_string()) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == v.get<std::string>()) return static_cast<int>(i);
        throw InputError("invalid_presentation", "unknown generator '" + v.get<std::string>() + "'");
    }
    throw InputError("invalid_presentation", "generator reference must be a name or an index");
}

inline std::vector<int> exponent_vector(const Json& v, std::size_t n) {
    if (!v.is_array() || v.size() != n)
        throw InputError("invalid_presentation", "exponent vector must have one entry per generator");
    std::vector<int> e;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw InputError("invalid_presentation", "exponents must be integers");
        e.push_back(x.get<int>());
    }
    return e;
}

inline Monomial monomial_from_json(const Json& v, std::size_t n) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer())
        throw InputError("invalid_presentation", "monomial must be [sign_exponent, [e1,...,ek]]");
    Monomial m = Monomial::unit(n);
    m.sign = v[0].get<int>();
    m.exps = exponent_vector(v[1], n);
    return m;
}

}  // namespace detail

inline BlueprintPresentation presentation_from_json(const Json& j) {
    try {
        BlueprintPresentation b;
        b.generator_names = j.at("generators").get<std::vector<std::string>>();
        if (b.size() > static_cast<std::size_t>(kMaxGenerators))
            throw InputError("invalid_presentation", "at most 64 generators are supported");
        if (j.contains("inverted"))
            for (const auto& v : j["inverted"]) b.inverted |= gen_bit(detail::generator_ref(v, b.generator_names));
        b.coeff_order = j.value("coeff_order", 1);
        if (j.contains("relations"))
            for (const auto& r : j["relations"]) {
                std::vector<Monomial> lhs, rhs;
                for (const auto& t : r.at("lhs")) lhs.push_back(detail::monomial_from_json(t, b.size()));
                for (const auto& t : r.at("rhs")) rhs.push_back(detail::monomial_from_json(t, b.size()));
                b.add_relation(std::move(lhs), std::move(rhs));
            }
        for (auto& r : b.relations) {
            for (auto& t : r.lhs.terms) t.sign %= b.coeff_order;
            for (auto& t : r.rhs.terms) t.sign %= b.coeff_order;
        }
        b.validate();
        b.canonicalize();
        return b;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid_presentation", e.what());
    }
}

// A presentation file optionally carries a comultiplication
// {"T": [[sign, [left exps], [right exps]], ...]} and a counit (generators
// sent to 1).
inline GroupModel model_from_json(const Json& j, const std::string& name) {
    GroupModel g;
    g.name = name;
    g.presentation = presentation_from_json(j);
    const auto& names = g.presentation.generator_names;
    const std::size_t n = names.size();
    try {
        if (j.contains("comult")) {
            g.comult.images.assign(n, {});
            for (auto it = j["comult"].begin(); it != j["comult"].end(); ++it) {
                int target = detail::generator_ref(Json(it.key()), names);
                for (const auto& t : it.value()) {
                    if (!t.is_array() || t.size() != 3)
                        throw InputError("invalid_presentation", "comult term must be [sign, [left], [right]]");
                    g.comult.images[target].push_back(
                        {t[0].get<int>(), detail::exponent_vector(t[1], n), detail::exponent_vector(t[2], n)});
                }
            }
        }
        if (j.contains("counit")) {
            GenSet c = 0;
            for (const auto& v : j["counit"]) c |= gen_bit(detail::generator_ref(v, names));
            g.counit = c;
        }
        if (j.contains("identity_point")) {
            GenSet c = 0;
            for (const auto& v : j["identity_point"]) c |= gen_bit(detail::generator_ref(v, names));
            g.identity_point = c;
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid_presentation", e.what());
    }
    return g;
}

// {"elements": [...], "table": [[...]]} with entries as indices or element
// names; semidirect files add "rank" and "actions": one r x r matrix per element.
struct GroupTableFile {
    GroupTable table;
    std::size_t rank = 0;
    std::vector<IntMatrix> actions;
};

inline GroupTableFile group_table_from_json(const Json& j) {
    try {
        GroupTableFile f;
        f.table.elements = j.at("elements").get<std::vector<std::string>>();
        for (const auto& row : j.at("table")) {
            std::vector<int> r;
            for (const auto& v : row) {
                if (v.is_string()) {
                    auto it = std::find(f.table.elements.begin(), f.table.elements.end(), v.get<std::string>());
                    if (it == f.table.elements.end()) throw InputError("malformed_table", "unknown element in table");
                    r.push_back(static_cast<int>(it - f.table.elements.begin()));
                } else {
                    r.push_back(v.get<int>());
                }
            }
            f.table.product.push_back(std::move(r));
        }
        f.rank = j.value("rank", 0);
        if (j.contains("actions")) {
            for (const auto& A : j["actions"]) f.actions.push_back(A.get<IntMatrix>());
        } else {
            f.actions.assign(f.table.elements.size(), identity_matrix(f.rank));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed_table", e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("file_not_found", "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid_json", path + ": " + e.what());
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("file_not_found", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json spectrum_to_json(const GroupModel& g, const SpectrumPoset& P, const std::vector<std::string>& labels = {}) {
    const auto& names = g.presentation.generator_names;
    Json j;
    j["model"] = g.name;
    j["generators"] = names;
    Json pts = Json::array(), ideals = Json::array(), hasse = Json::array();
    for (const auto& p : P.points) {
        pts.push_back(bitset_string(p.vars, names.size()));
        ideals.push_back(format_ideal(p.vars, names));
    }
    for (auto [a, b] : P.hasse) hasse.push_back({a, b});
    j["count"] = P.points.size();
    j["points"] = pts;
    j["ideals"] = ideals;
    if (!labels.empty()) j["labels"] = labels;
    j["hasse"] = hasse;
    j["components"] = P.component_count;
    return j;
}

inline Json field_to_json(const NormalFormBlueField& f) {
    return {{"epsilon", f.epsilon},     {"units", f.unit_names},        {"lattice", f.lattice},
            {"signs", f.signs},         {"free_rank", f.free_rank},     {"torsion", f.torsion_invariants}};
}

inline Json rank_space_to_json(const GroupModel& g, const RankSpace& rs, const WeylMonoid* w = nullptr) {
    Json j;
    j["model"] = g.name;
    auto r = rs.rank();
    j["rank"] = r ? Json(*r) : Json(nullptr);
    Json pts = Json::array();
    for (const auto& p : rs.points) {
        Json pj{{"pattern", bitset_string(p.point.vars, rs.generator_count)},
                {"ideal", format_ideal(p.point.vars, rs.generator_names)},
                {"label", p.label},
                {"component", p.component},
                {"rank", p.rank}};
        Json fj = field_to_json(p.field);
        for (auto it = fj.begin(); it != fj.end(); ++it) pj[it.key()] = it.value();
        pts.push_back(pj);
    }
    j["points"] = pts;
    if (!g.rank_filter_name.empty()) j["rank_filter"] = g.rank_filter_name;
    if (w) {
        j["weyl_table"] = w->table;
        j["identity"] = w->identity;
    }
    return j;
}

inline Json pattern_report_to_json(const PatternReport& rep) {
    Json j;
    j["rows"] = rep.rows;
    j["cols"] = rep.cols;
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    Json pats = Json::array();
    for (const auto& [p, e] : rep.patterns) {
        Json zeros = Json::array();
        for (std::size_t k = 0; k < rep.rows * rep.cols; ++k)
            if (has_gen(p, static_cast<int>(k))) zeros.push_back({k / rep.cols + 1, k % rep.cols + 1});
        Json ws = Json::array();
        for (const auto& w : e.witnesses) {
            Json wj{{"family", w.family}, {"locus", w.locus}, {"field", w.field}, {"characteristic", w.characteristic}};
            if (!w.modulus.empty()) wj["modulus"] = w.modulus;
            wj["values"] = w.values;
            ws.push_back(wj);
        }
        pats.push_back({{"pattern", bitset_string(p, rep.rows * rep.cols)},
                        {"zeros", zeros},
                        {"characteristics", e.characteristics},
                        {"witnesses", ws}});
    }
    j["count"] = rep.patterns.size();
    j["patterns"] = pats;
    j["warnings"] = rep.warnings;
    return j;
}

inline Json error_to_json(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace f1tits
