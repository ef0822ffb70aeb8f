#pragma once

#include <string>

#include "catalog.hpp"
#include "json_io.hpp"

namespace f1tits {

namespace detail {

inline std::size_t parse_size(const std::string& s, const std::string& selector) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4)
        throw InputError("unknown_model", "bad size in model selector '" + selector + "'");
    return std::stoul(s);
}

}  // namespace detail

// sl:n, gl:n, sp:2n, so:n, o:2n, torus:r, const:<file|Zn>, semidirect:<file>,
// psl2-conj, psl2-adj, parabolic:n:flag, unipotent:n:flag, levi:n:flag,
// nstorus, or a presentation JSON file.
inline GroupModel model_from_selector(const std::string& sel) {
    if (sel == "nstorus") return nonstandard_torus();
    if (sel == "psl2-conj") return psl2_conj();
    if (sel == "psl2-adj") return psl2_adjoint();
    auto colon = sel.find(':');
    std::string head = sel.substr(0, colon), rest = colon == std::string::npos ? "" : sel.substr(colon + 1);
    if (colon != std::string::npos) {
        if (head == "sl") return sl(detail::parse_size(rest, sel));
        if (head == "gl") return gl(detail::parse_size(rest, sel));
        if (head == "sp") return sp(detail::parse_size(rest, sel));
        if (head == "so") return so(detail::parse_size(rest, sel));
        if (head == "o") return o_even(detail::parse_size(rest, sel));
        if (head == "torus") return torus(detail::parse_size(rest, sel));
        if (head == "const" || head == "semidirect") {
            GroupTableFile f;
            if (head == "const" && rest.size() > 1 && rest[0] == 'Z' &&
                rest.find_first_not_of("0123456789", 1) == std::string::npos) {
                f.table = cyclic_group(detail::parse_size(rest.substr(1), sel));
            } else {
                f = group_table_from_json(read_json_file(rest));
            }
            if (head == "const") return constant_group(f.table);
            if (f.actions.empty()) f.actions.assign(f.table.elements.size(), identity_matrix(f.rank));
            return semidirect(f.rank, f.table, f.actions);
        }
        if (head == "parabolic" || head == "unipotent" || head == "levi") {
            auto c2 = rest.find(':');
            std::size_t n = detail::parse_size(rest.substr(0, c2), sel);
            detail::check_dimension(n, 1, head.c_str());
            std::string flag = c2 == std::string::npos ? std::string(n, '1') : rest.substr(c2 + 1);
            if (c2 == std::string::npos) {
                flag.clear();
                for (std::size_t i = 0; i < n; ++i) flag += (i ? ",1" : "1");
            }
            auto blocks = parse_flag(flag, n);
            if (head == "parabolic") return standard_parabolic(n, blocks);
            if (head == "unipotent") return unipotent_radical(n, blocks);
            return levi(n, blocks);
        }
    }
    if (sel.size() > 5 && sel.substr(sel.size() - 5) == ".json") return model_from_json(read_json_file(sel), sel);
    throw InputError("unknown_model", "unknown model '" + sel + "'");
}

}  // namespace f1tits
