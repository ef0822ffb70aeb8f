#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "group_model.hpp"
#include "lattice.hpp"
#include "spectrum.hpp"

namespace f1tits {

constexpr std::size_t kMaxMatrixDimension = 6;

struct Permutation {
    std::vector<int> image;  // image[i] = sigma(i), 0-based
    int sign = 1;
};

inline std::vector<Permutation> permutations(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        out.push_back({p, inversions % 2 ? -1 : 1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace detail {

inline void check_dimension(std::size_t n, std::size_t lo, const char* what) {
    if (n < lo) throw InputError("invalid_argument", std::string(what) + ": matrix dimension must be at least " + std::to_string(lo));
    if (n > kMaxMatrixDimension)
        throw cap_exceeded(std::string(what) + ": matrix dimension above " + std::to_string(kMaxMatrixDimension));
}

inline std::string entry_name(std::size_t i, std::size_t j) {
    return "T" + std::to_string(i + 1) + std::to_string(j + 1);
}

// n x n matrix of generators T_ij (row-major), optionally followed by d
inline GroupModel matrix_skeleton(std::string name, std::size_t n, bool with_d) {
    GroupModel g;
    g.name = std::move(name);
    g.dim = n;
    g.entry_generator.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            g.entry_generator[i][j] = static_cast<int>(g.presentation.size());
            g.presentation.generator_names.push_back(entry_name(i, j));
        }
    if (with_d) {
        g.aux_generators.push_back(static_cast<int>(g.presentation.size()));
        g.presentation.generator_names.push_back("d");
    }
    const std::size_t total = g.presentation.size();
    g.comult.images.assign(total, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                TensorTerm t;
                t.left.assign(total, 0);
                t.right.assign(total, 0);
                t.left[g.entry_generator[i][k]] = 1;
                t.right[g.entry_generator[k][j]] = 1;
                g.comult.images[g.entry_generator[i][j]].push_back(std::move(t));
            }
    GenSet counit = 0;
    for (std::size_t i = 0; i < n; ++i) counit |= gen_bit(g.entry_generator[i][i]);
    if (with_d) {
        int d = g.aux_generators[0];
        TensorTerm t;
        t.left.assign(total, 0);
        t.right.assign(total, 0);
        t.left[d] = 1;
        t.right[d] = 1;
        g.comult.images[d].push_back(std::move(t));
        counit |= gen_bit(d);
    }
    g.counit = counit;
    return g;
}

// sum over even permutations == sum over odd permutations + 1, each term
// multiplied by `extra` (d for the GL embedding)
inline void add_determinant_relation(GroupModel& g, bool with_d) {
    auto& b = g.presentation;
    std::vector<Monomial> even, odd;
    for (const auto& p : permutations(g.dim)) {
        Monomial m = b.one();
        for (std::size_t i = 0; i < g.dim; ++i) m.exps[g.entry_generator[i][p.image[i]]] += 1;
        if (with_d) m.exps[g.aux_generators[0]] += 1;
        (p.sign > 0 ? even : odd).push_back(m);
    }
    odd.push_back(b.one());
    b.add_relation(std::move(even), std::move(odd));
}

inline Monomial entry_product(const GroupModel& g, std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
    Monomial m = g.presentation.one();
    m.exps[g.entry_generator[i1][j1]] += 1;
    m.exps[g.entry_generator[i2][j2]] += 1;
    return m;
}

// permutation underlying a monomial-matrix vanishing pattern, if any
inline std::optional<Permutation> pattern_permutation(const GroupModel& g, GenSet vars) {
    Permutation p;
    p.image.assign(g.dim, -1);
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j) {
            int idx = g.entry_generator[i][j];
            if (idx >= 0 && !has_gen(vars, idx)) {
                if (p.image[i] >= 0) return std::nullopt;
                p.image[i] = static_cast<int>(j);
            }
        }
    for (int v : p.image)
        if (v < 0) return std::nullopt;
    int inv = 0;
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = i + 1; j < g.dim; ++j)
            if (p.image[i] > p.image[j]) ++inv;
    p.sign = inv % 2 ? -1 : 1;
    return p;
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace detail

inline GroupModel sl(std::size_t n) {
    detail::check_dimension(n, 2, "sl");
    GroupModel g = detail::matrix_skeleton("sl:" + std::to_string(n), n, false);
    detail::add_determinant_relation(g, false);
    g.presentation.canonicalize();
    g.expected = {n - 1, detail::factorial(n), "A" + std::to_string(n - 1)};
    g.tits_weyl = true;
    return g;
}

inline GroupModel gl(std::size_t n) {
    detail::check_dimension(n, 1, "gl");
    GroupModel g = detail::matrix_skeleton("gl:" + std::to_string(n), n, true);
    detail::add_determinant_relation(g, true);
    g.presentation.canonicalize();
    g.expected = {n, detail::factorial(n), n > 1 ? "A" + std::to_string(n - 1) : "trivial"};
    g.tits_weyl = true;
    return g;
}

// Sp_2n inside GL_2n: rows satisfy A J A^t = J.
inline GroupModel sp(std::size_t two_n) {
    if (two_n % 2) throw InputError("invalid_argument", "sp expects an even dimension");
    detail::check_dimension(two_n, 2, "sp");
    const std::size_t n = two_n / 2, N = two_n;
    GroupModel g = detail::matrix_skeleton("sp:" + std::to_string(N), N, true);
    auto& b = g.presentation;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            std::vector<Monomial> lhs, rhs;
            for (std::size_t l = 0; l < n; ++l) lhs.push_back(detail::entry_product(g, i, l, j, N - 1 - l));
            for (std::size_t l = n; l < N; ++l) rhs.push_back(detail::entry_product(g, i, l, j, N - 1 - l));
            if (i == N - 1 - j) rhs.push_back(b.one());
            b.add_relation(std::move(lhs), std::move(rhs));
        }
    detail::add_determinant_relation(g, true);
    b.canonicalize();
    std::size_t w = (std::size_t{1} << n) * detail::factorial(n);
    g.expected = {n, w, "C" + std::to_string(n)};
    g.tits_weyl = true;
    return g;
}

namespace detail {

// q_N(gx) = q_N(x) coefficientwise, with q = x_{m+1}^2 + sum_{i<=m} x_i x_{N+1-i}
// (odd N = 2m+1) or q = sum_{i<=m} x_i x_{N+1-i} (even N = 2m).
inline void add_quadratic_form_relations(GroupModel& g) {
    auto& b = g.presentation;
    const std::size_t N = g.dim, m = N / 2;
    const bool odd = N % 2 == 1;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t c = a; c < N; ++c) {
            std::vector<Monomial> lhs, rhs;
            if (a < c) {
                if (odd) {
                    lhs.push_back(entry_product(g, m, a, m, c));
                    lhs.push_back(entry_product(g, m, a, m, c));
                }
                for (std::size_t i = 0; i < m; ++i) {
                    lhs.push_back(entry_product(g, i, a, N - 1 - i, c));
                    lhs.push_back(entry_product(g, i, c, N - 1 - i, a));
                }
                if (c == N - 1 - a) rhs.push_back(b.one());
            } else {
                if (odd) lhs.push_back(entry_product(g, m, a, m, a));
                for (std::size_t i = 0; i < m; ++i) lhs.push_back(entry_product(g, i, a, N - 1 - i, a));
                if (odd && a == m) rhs.push_back(b.one());
            }
            b.add_relation(std::move(lhs), std::move(rhs));
        }
}

}  // namespace detail

inline GroupModel o_even(std::size_t N) {
    if (N % 2) throw InputError("invalid_argument", "o expects an even dimension");
    detail::check_dimension(N, 2, "o");
    GroupModel g = detail::matrix_skeleton("o:" + std::to_string(N), N, true);
    detail::add_quadratic_form_relations(g);
    detail::add_determinant_relation(g, true);
    g.presentation.canonicalize();
    const std::size_t m = N / 2;
    g.expected = {m, (std::size_t{1} << m) * detail::factorial(m), "B" + std::to_string(m) + " (hyperoctahedral)"};
    g.tits_weyl = true;
    return g;
}

inline GroupModel so(std::size_t N) {
    detail::check_dimension(N, 2, "so");
    const std::size_t m = N / 2;
    if (N % 2 == 1) {
        GroupModel g = detail::matrix_skeleton("so:" + std::to_string(N), N, false);
        detail::add_quadratic_form_relations(g);
        detail::add_determinant_relation(g, false);
        g.presentation.canonicalize();
        g.expected = {m, (std::size_t{1} << m) * detail::factorial(m), "B" + std::to_string(m)};
        g.tits_weyl = true;
        return g;
    }
    GroupModel g = o_even(N);
    g.name = "so:" + std::to_string(N);
    GroupModel shape = g;
    g.rank_filter = [shape](GenSet vars) {
        auto p = detail::pattern_permutation(shape, vars);
        return p && p->sign == 1;
    };
    g.rank_filter_name = "permutation sign +1";
    std::size_t w = m >= 1 ? (std::size_t{1} << (m - 1)) * detail::factorial(m) : 1;
    g.expected = {m, w, "D" + std::to_string(m)};
    return g;
}

inline GroupModel torus(std::size_t r) {
    if (r > 16) throw cap_exceeded("torus rank above 16");
    GroupModel g;
    g.name = "torus:" + std::to_string(r);
    g.presentation = mk_free(r, r ? (gen_bit(static_cast<int>(r)) - 1) : 0, 1);
    g.comult.images.assign(r, {});
    for (std::size_t i = 0; i < r; ++i) {
        TensorTerm t;
        t.left.assign(r, 0);
        t.right.assign(r, 0);
        t.left[i] = t.right[i] = 1;
        g.comult.images[i].push_back(t);
    }
    g.counit = g.presentation.all_generators();
    g.expected = {r, 1, "trivial"};
    g.tits_weyl = true;
    return g;
}

struct GroupTable {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> product;  // product[g][h] = gh

    int identity() const {
        for (std::size_t e = 0; e < elements.size(); ++e) {
            bool ok = true;
            for (std::size_t g = 0; g < elements.size(); ++g)
                if (product[e][g] != static_cast<int>(g) || product[g][e] != static_cast<int>(g)) ok = false;
            if (ok) return static_cast<int>(e);
        }
        return -1;
    }

    void validate() const {
        const std::size_t n = elements.size();
        if (n == 0) throw InputError("malformed_table", "group table is empty");
        if (product.size() != n) throw InputError("malformed_table", "group table has wrong row count");
        for (const auto& row : product) {
            if (row.size() != n) throw InputError("malformed_table", "group table has wrong column count");
            for (int v : row)
                if (v < 0 || v >= static_cast<int>(n)) throw InputError("malformed_table", "group table entry out of range");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (product[product[a][b]][c] != product[a][product[b][c]])
                        throw InputError("malformed_table", "group table is not associative");
        int e = identity();
        if (e < 0) throw InputError("malformed_table", "group table has no identity");
        for (std::size_t a = 0; a < n; ++a) {
            bool inv = false;
            for (std::size_t b = 0; b < n; ++b)
                if (product[a][b] == e) inv = true;
            if (!inv) throw InputError("malformed_table", "group table element without inverse");
        }
    }
};

inline GroupTable cyclic_group(std::size_t n) {
    GroupTable t;
    for (std::size_t i = 0; i < n; ++i) t.elements.push_back(std::to_string(i));
    t.product.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.product[i][j] = static_cast<int>((i + j) % n);
    return t;
}

// G_{F1} x| T: the disjoint union over g in G of tori of rank r, presented as
// the product blueprint with idempotents e_g, coordinates t_{g,i} and their
// inverses u_{g,i} on the g-th component; theta_g acts by the matrix A(g).
inline GroupModel semidirect(std::size_t r, const GroupTable& table, const std::vector<IntMatrix>& actions) {
    table.validate();
    const std::size_t n = table.elements.size();
    if (actions.size() != n) throw InputError("malformed_table", "one action matrix per group element expected");
    for (const auto& A : actions) {
        if (A.size() != r) throw InputError("malformed_table", "action matrix has wrong size");
        for (const auto& row : A)
            if (row.size() != r) throw InputError("malformed_table", "action matrix has wrong size");
    }
    if (n * (1 + 2 * r) > static_cast<std::size_t>(kMaxGenerators))
        throw cap_exceeded("semidirect product needs more than 64 generators");
    GroupModel g;
    g.name = r ? "semidirect" : "const";
    auto& b = g.presentation;
    std::vector<int> e(n);
    std::vector<std::vector<int>> t(n, std::vector<int>(r)), u(n, std::vector<int>(r));
    for (std::size_t k = 0; k < n; ++k) {
        e[k] = static_cast<int>(b.size());
        b.generator_names.push_back("e_" + table.elements[k]);
        for (std::size_t i = 0; i < r; ++i) {
            t[k][i] = static_cast<int>(b.size());
            b.generator_names.push_back("t_" + table.elements[k] + "_" + std::to_string(i + 1));
            u[k][i] = static_cast<int>(b.size());
            b.generator_names.push_back("u_" + table.elements[k] + "_" + std::to_string(i + 1));
        }
    }
    auto mono = [&](std::initializer_list<int> gens) {
        Monomial m = b.one();
        for (int x : gens) m.exps[x] += 1;
        return m;
    };
    std::vector<Monomial> all_e;
    for (std::size_t k = 0; k < n; ++k) {
        all_e.push_back(mono({e[k]}));
        b.add_relation({mono({e[k], e[k]})}, {mono({e[k]})});
        for (std::size_t l = k + 1; l < n; ++l) b.add_relation({mono({e[k], e[l]})}, {});
        for (std::size_t i = 0; i < r; ++i) {
            b.add_relation({mono({t[k][i], e[k]})}, {mono({t[k][i]})});
            b.add_relation({mono({u[k][i], e[k]})}, {mono({u[k][i]})});
            b.add_relation({mono({t[k][i], u[k][i]})}, {mono({e[k]})});
            for (std::size_t l = 0; l < n; ++l)
                if (l != k) {
                    b.add_relation({mono({t[k][i], e[l]})}, {});
                    b.add_relation({mono({u[k][i], e[l]})}, {});
                }
        }
    }
    b.add_relation(all_e, {b.one()});
    b.canonicalize();

    const std::size_t total = b.size();
    g.comult.images.assign(total, {});
    for (std::size_t g1 = 0; g1 < n; ++g1)
        for (std::size_t g2 = 0; g2 < n; ++g2) {
            const int prod = table.product[g1][g2];
            TensorTerm te;
            te.left.assign(total, 0);
            te.right.assign(total, 0);
            te.left[e[g1]] = 1;
            te.right[e[g2]] = 1;
            g.comult.images[e[prod]].push_back(te);
            for (std::size_t i = 0; i < r; ++i)
                for (int inv = 0; inv < 2; ++inv) {
                    TensorTerm tt;
                    tt.left.assign(total, 0);
                    tt.right.assign(total, 0);
                    tt.left[inv ? u[g1][i] : t[g1][i]] = 1;
                    for (std::size_t j = 0; j < r; ++j) {
                        long long a = actions[g1][i][j] * (inv ? -1 : 1);
                        if (a > 0) tt.right[t[g2][j]] += static_cast<int>(a);
                        if (a < 0) tt.right[u[g2][j]] += static_cast<int>(-a);
                    }
                    g.comult.images[inv ? u[prod][i] : t[prod][i]].push_back(tt);
                }
        }
    const int id = table.identity();
    GenSet counit = gen_bit(e[id]);
    for (std::size_t i = 0; i < r; ++i) counit |= gen_bit(t[id][i]) | gen_bit(u[id][i]);
    g.counit = counit;
    bool tw = true;
    for (std::size_t k = 0; k < n; ++k) {
        if (static_cast<int>(k) == id) continue;
        bool identity = true;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (actions[k][i][j] != (i == j ? 1 : 0)) identity = false;
        if (identity) tw = false;
    }
    g.tits_weyl = tw;
    g.expected = {r, n, "table"};
    return g;
}

inline GroupModel constant_group(const GroupTable& table) {
    std::vector<IntMatrix> none(table.elements.size());
    GroupModel g = semidirect(0, table, none);
    g.name = "const";
    return g;
}

// F1[S, T^{+-1}] // S == 1 + 1 with S -> S', T -> T' T''.
inline GroupModel nonstandard_torus() {
    GroupModel g;
    g.name = "nstorus";
    auto& b = g.presentation;
    b.generator_names = {"S", "T"};
    b.inverted = gen_bit(1);
    b.add_relation({b.var(0)}, {b.one(), b.one()});
    b.canonicalize();
    g.comult.images.assign(2, {});
    g.comult.images[0].push_back({0, {1, 0}, {0, 0}});
    g.comult.images[1].push_back({0, {0, 1}, {0, 1}});
    g.identity_point = GenSet{0};
    g.expected = {1, 1, "trivial"};
    g.tits_weyl = true;
    return g;
}

// Unit field F_{1^eps}[Lambda] of a point given by a torus parametrization:
// entry k equals (-1)^sign_k * prod_j lambda_j^{exps_k[j]}.
inline NormalFormBlueField field_from_parametrization(const std::vector<std::string>& names,
                                                      const std::vector<int>& signs, const IntMatrix& exps,
                                                      std::size_t params) {
    NormalFormBlueField f;
    f.unit_names = names;
    IntMatrix ker = integer_left_kernel(exps, params);
    SignedLattice L(names.size());
    for (auto& row : ker) {
        int bit = 0;
        for (std::size_t k = 0; k < row.size(); ++k) bit ^= static_cast<int>(row[k] & 1) * signs[k];
        f.lattice.push_back(row);
        f.signs.push_back(bit);
        L.add(row, bit);
    }
    f.epsilon = 1;
    for (int s : f.signs)
        if (s) f.epsilon = 2;
    f.free_rank = L.free_rank();
    f.torsion_invariants = L.torsion();
    return f;
}

namespace detail {

struct DeclaredPoint {
    std::string label;
    std::vector<std::pair<int, int>> zeros;  // 1-based matrix positions
};

inline GroupModel declared_matrix_model(std::string name, std::size_t n, const std::vector<DeclaredPoint>& pts) {
    GroupModel g = matrix_skeleton(std::move(name), n, false);
    DeclaredSpectrum ds;
    std::vector<std::pair<GenSet, std::string>> sorted;
    for (const auto& p : pts) {
        GenSet s = 0;
        for (auto [i, j] : p.zeros) s |= gen_bit(g.entry_generator[i - 1][j - 1]);
        sorted.push_back({s, p.label});
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return bitset_less(a.first, b.first); });
    for (auto& [s, l] : sorted) {
        ds.points.push_back({s});
        ds.labels.push_back(l);
    }
    g.declared = std::move(ds);
    return g;
}

inline void declare_rank_point(GroupModel& g, const std::string& label,
                               const std::vector<std::tuple<int, int, int, std::vector<long long>>>& entries,
                               std::size_t params) {
    auto& ds = *g.declared;
    int idx = -1;
    for (std::size_t i = 0; i < ds.labels.size(); ++i)
        if (ds.labels[i] == label) idx = static_cast<int>(i);
    std::vector<std::string> names;
    std::vector<int> signs;
    IntMatrix exps;
    for (const auto& [i, j, s, e] : entries) {
        names.push_back(g.presentation.generator_names[g.entry_generator[i - 1][j - 1]]);
        signs.push_back(s);
        exps.push_back(e);
    }
    ds.rank_points.push_back(idx);
    ds.rank_fields.push_back(field_from_parametrization(names, signs, exps, params));
}

}  // namespace detail

// PSL_2 through the conjugation action on 2x2 matrices: the matrices
// A(a,b,c,d) with ad - bc = 1.  Points are the realizable zero patterns.
inline GroupModel psl2_conj() {
    using P = std::vector<std::pair<int, int>>;
    // entry (r,c) of A(a,b,c,d) as a monomial in a,b,c,d
    const char* entries[4][4] = {{"ad", "ac", "bd", "bc"}, {"ab", "aa", "bb", "ab"},
                                 {"cd", "cc", "dd", "cd"}, {"bc", "ac", "bd", "ad"}};
    auto zeros_for = [&](const std::string& vanishing) {
        P z;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                std::string e = entries[r][c];
                if (e.find_first_of(vanishing) != std::string::npos) z.push_back({r + 1, c + 1});
            }
        return z;
    };
    std::vector<detail::DeclaredPoint> pts{{"generic", {}},       {"a=0", zeros_for("a")},    {"b=0", zeros_for("b")},
                                           {"c=0", zeros_for("c")}, {"d=0", zeros_for("d")},  {"a=d=0", zeros_for("ad")},
                                           {"b=c=0", zeros_for("bc")}};
    GroupModel g = detail::declared_matrix_model("psl2-conj", 4, pts);
    // b = c = 0, d = a^-1: diag(1, a^2, a^-2, 1)
    detail::declare_rank_point(g, "b=c=0", {{1, 1, 0, {0}}, {2, 2, 0, {2}}, {3, 3, 0, {-2}}, {4, 4, 0, {0}}}, 1);
    // a = d = 0, c = -b^-1: entries -bc = 1, -b^2, -c^2 = -b^-2, -bc = 1
    detail::declare_rank_point(g, "a=d=0", {{1, 4, 0, {0}}, {2, 3, 1, {2}}, {3, 2, 1, {-2}}, {4, 1, 0, {0}}}, 1);
    g.expected = {1, 2, "A1"};
    g.tits_weyl = true;
    return g;
}

// PSL_2 through the adjoint action on sl_2 in the basis (l_-a, h_a, l_a).
inline GroupModel psl2_adjoint() {
    std::vector<detail::DeclaredPoint> pts{
        {"p^e", {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}},
        {"p^s", {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 3}}},
        {"x1", {{2, 1}, {3, 1}, {3, 2}}},
        {"x1'", {{2, 1}, {2, 3}, {3, 1}, {3, 2}}},
        {"x2", {{1, 2}, {1, 3}, {2, 3}}},
        {"x2'", {{1, 2}, {1, 3}, {2, 1}, {2, 3}}},
        {"x3", {{1, 1}, {1, 2}, {2, 1}}},
        {"x3'", {{1, 1}, {1, 2}, {2, 1}, {2, 3}}},
        {"x4", {{2, 3}, {3, 2}, {3, 3}}},
        {"x4'", {{2, 1}, {2, 3}, {3, 2}, {3, 3}}},
        {"x5", {{2, 2}}},
        {"eta", {}},
        {"eta'", {{2, 1}, {2, 3}}},
    };
    GroupModel g = detail::declared_matrix_model("psl2-adj", 3, pts);
    // t = 0 on the Borel cell: diag(lambda^-2, 1, lambda^2)
    detail::declare_rank_point(g, "p^e", {{1, 1, 0, {-2}}, {2, 2, 0, {0}}, {3, 3, 0, {2}}}, 1);
    // s = t = 0 on the big cell: entries -lambda^2, -1, -lambda^-2
    detail::declare_rank_point(g, "p^s", {{1, 3, 1, {2}}, {2, 2, 1, {0}}, {3, 1, 1, {-2}}}, 1);
    g.expected = {1, 2, "A1"};
    g.tits_weyl = true;
    return g;
}

// composition of n into block sizes
inline std::vector<std::size_t> parse_flag(const std::string& flag, std::size_t n) {
    std::vector<std::size_t> blocks;
    std::size_t start = 0;
    while (start <= flag.size()) {
        auto end = flag.find_first_of(",-", start);
        if (end == std::string::npos) end = flag.size();
        std::string part = flag.substr(start, end - start);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("invalid_flag", "flag must be a comma separated composition of n");
        blocks.push_back(std::stoul(part));
        start = end + 1;
    }
    std::size_t sum = 0;
    for (auto b : blocks) {
        if (b == 0) throw InputError("invalid_flag", "flag blocks must be positive");
        sum += b;
    }
    if (sum != n) throw InputError("invalid_flag", "flag blocks must sum to n");
    return blocks;
}

namespace detail {
inline std::vector<std::size_t> block_of(const std::vector<std::size_t>& blocks) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (std::size_t i = 0; i < blocks[k]; ++i) out.push_back(k);
    return out;
}
}  // namespace detail

// Standard parabolic of GL_n: entries strictly below the block diagonal vanish.
inline GroupModel standard_parabolic(std::size_t n, const std::vector<std::size_t>& blocks) {
    GroupModel g = gl(n);
    auto blk = detail::block_of(blocks);
    GenSet kill = 0;
    std::size_t free_perms = 1;
    for (auto b : blocks) free_perms *= detail::factorial(b);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (blk[i] > blk[j]) kill |= gen_bit(g.entry_generator[i][j]);
    g.presentation = quotient_by_vars(g.presentation, kill);
    std::string tag;
    for (auto b : blocks) tag += (tag.empty() ? "" : ",") + std::to_string(b);
    g.name = "parabolic:" + std::to_string(n) + ":" + tag;
    g.expected = {n, free_perms, "Levi Weyl group"};
    return g;
}

// Levi submonoid: only the diagonal blocks survive.
inline GroupModel levi(std::size_t n, const std::vector<std::size_t>& blocks) {
    GroupModel g = gl(n);
    auto blk = detail::block_of(blocks);
    GenSet kill = 0;
    std::size_t free_perms = 1;
    for (auto b : blocks) free_perms *= detail::factorial(b);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (blk[i] != blk[j]) kill |= gen_bit(g.entry_generator[i][j]);
    g.presentation = quotient_by_vars(g.presentation, kill);
    std::string tag;
    for (auto b : blocks) tag += (tag.empty() ? "" : ",") + std::to_string(b);
    g.name = "levi:" + std::to_string(n) + ":" + tag;
    g.expected = {n, free_perms, "Levi Weyl group"};
    return g;
}

// Unipotent radical of the standard parabolic: the diagonal blocks become the
// identity, leaving the free blueprint on the entries above the blocks.
inline GroupModel unipotent_radical(std::size_t n, const std::vector<std::size_t>& blocks) {
    GroupModel full = gl(n);
    auto blk = detail::block_of(blocks);
    auto& b = full.presentation;
    GenSet kill = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (blk[i] > blk[j] || (blk[i] == blk[j] && i != j)) kill |= gen_bit(full.entry_generator[i][j]);
    BlueprintPresentation q = quotient_by_vars(b, kill);
    for (std::size_t i = 0; i < n; ++i) q.add_relation({q.var(full.entry_generator[i][i])}, {q.one()});
    q.canonicalize();
    GroupModel g;
    std::string tag;
    for (auto x : blocks) tag += (tag.empty() ? "" : ",") + std::to_string(x);
    g.name = "unipotent:" + std::to_string(n) + ":" + tag;
    g.presentation = simplify(q);
    g.dim = n;
    g.entry_generator.assign(n, std::vector<int>(n, -1));
    const auto& names = g.presentation.generator_names;
    auto idx = [&](std::size_t i, std::size_t j) {
        auto it = std::find(names.begin(), names.end(), detail::entry_name(i, j));
        return it == names.end() ? -1 : static_cast<int>(it - names.begin());
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.entry_generator[i][j] = idx(i, j);
    const std::size_t total = g.presentation.size();
    g.comult.images.assign(total, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int target = g.entry_generator[i][j];
            if (target < 0) continue;
            for (std::size_t k = 0; k < n; ++k) {
                bool left_one = i == k, right_one = k == j;
                int l = left_one ? -1 : g.entry_generator[i][k];
                int r = right_one ? -1 : g.entry_generator[k][j];
                if ((!left_one && l < 0) || (!right_one && r < 0)) continue;
                TensorTerm t;
                t.left.assign(total, 0);
                t.right.assign(total, 0);
                if (l >= 0) t.left[l] = 1;
                if (r >= 0) t.right[r] = 1;
                g.comult.images[target].push_back(std::move(t));
            }
        }
    g.counit = GenSet{0};
    g.expected = {0, 1, "trivial"};
    return g;
}

// X x Y with the componentwise law.
inline GroupModel product_model(const GroupModel& a, const GroupModel& b) {
    if (a.declared || b.declared) throw unsupported("products of declared-point models are not supported");
    GroupModel g;
    g.name = a.name + " x " + b.name;
    g.presentation = tensor(a.presentation, b.presentation);
    const std::size_t na = a.presentation.size(), total = g.presentation.size();
    g.comult.images.assign(total, {});
    auto shift = [&](const std::vector<int>& v, std::size_t off) {
        std::vector<int> out(total, 0);
        for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
        return out;
    };
    for (std::size_t i = 0; i < na; ++i)
        for (const auto& t : a.comult.images[i]) g.comult.images[i].push_back({t.sign, shift(t.left, 0), shift(t.right, 0)});
    for (std::size_t i = 0; i < b.presentation.size(); ++i)
        for (const auto& t : b.comult.images[i])
            g.comult.images[na + i].push_back({t.sign, shift(t.left, na), shift(t.right, na)});
    if (a.counit && b.counit) g.counit = *a.counit | (*b.counit << na);
    if (!g.counit) {
        GenSet ia = a.identity_point.value_or(0), ib = b.identity_point.value_or(0);
        if (a.counit) ia = a.presentation.all_generators() & ~*a.counit;
        if (b.counit) ib = b.presentation.all_generators() & ~*b.counit;
        g.identity_point = ia | (ib << na);
    }
    if (a.expected.rank && b.expected.rank) g.expected.rank = *a.expected.rank + *b.expected.rank;
    if (a.expected.weyl_order && b.expected.weyl_order)
        g.expected.weyl_order = *a.expected.weyl_order * *b.expected.weyl_order;
    return g;
}

}  // namespace f1tits
