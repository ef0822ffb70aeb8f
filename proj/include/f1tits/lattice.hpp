#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace f1tits {

using IntMatrix = std::vector<std::vector<long long>>;

namespace detail {
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw ComputationError("overflow", "integer overflow in lattice arithmetic");
    return r;
}
inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw ComputationError("overflow", "integer overflow in lattice arithmetic");
    return r;
}
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
// quotient with remainder in (-|b|/2, |b|/2]
inline long long round_div(long long a, long long b) {
    long long q = floor_div(a, b);
    long long r = a - q * b;
    if (2 * std::llabs(r) > std::llabs(b)) ++q;
    return q;
}
// row_i -= q * row_j
inline void axpy(std::vector<long long>& dst, const std::vector<long long>& src, long long q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = checked_sub(dst[k], checked_mul(q, src[k]));
}
}  // namespace detail

inline std::size_t columns_of(const IntMatrix& m, std::size_t fallback = 0) {
    return m.empty() ? fallback : m[0].size();
}

struct SmithResult {
    std::vector<long long> divisors;  // nonzero diagonal entries, d_i | d_{i+1}
    std::size_t rank = 0;
    IntMatrix U, V, D;  // U * M * V = D, U and V unimodular
};

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix I(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = columns_of(b);
    IntMatrix r(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t])
                for (std::size_t j = 0; j < m; ++j)
                    r[i][j] += detail::checked_mul(a[i][t], b[t][j]);
    return r;
}

inline IntMatrix transpose(const IntMatrix& a, std::size_t cols = 0) {
    std::size_t n = a.size(), m = columns_of(a, cols);
    IntMatrix t(m, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

// Smith normal form with transforms.  `cols` gives the column count when M has no rows.
inline SmithResult smith_normal_form(const IntMatrix& M, std::size_t cols = 0) {
    using detail::axpy;
    const std::size_t n = M.size(), m = columns_of(M, cols);
    IntMatrix D = M, U = identity_matrix(n), V = identity_matrix(m);
    auto col_op = [&](IntMatrix& A, std::size_t dst, std::size_t src, long long q) {
        for (auto& row : A) row[dst] = detail::checked_sub(row[dst], detail::checked_mul(q, row[src]));
    };
    auto swap_cols = [&](IntMatrix& A, std::size_t a, std::size_t b) {
        for (auto& row : A) std::swap(row[a], row[b]);
    };
    std::size_t t = 0;
    for (; t < std::min(n, m); ++t) {
        // pick smallest nonzero entry in the remaining block as pivot
        for (;;) {
            std::size_t pi = n, pj = m;
            long long best = 0;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < m; ++j)
                    if (D[i][j] != 0 && (best == 0 || std::llabs(D[i][j]) < best)) {
                        best = std::llabs(D[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (best == 0) goto done;
            std::swap(D[t], D[pi]);
            std::swap(U[t], U[pi]);
            swap_cols(D, t, pj);
            swap_cols(V, t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                long long q = detail::round_div(D[i][t], D[t][t]);
                axpy(D[i], D[t], q);
                axpy(U[i], U[t], q);
                if (D[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                long long q = detail::round_div(D[t][j], D[t][t]);
                col_op(D, j, t, q);
                col_op(V, j, t, q);
                if (D[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: pivot must divide every remaining entry
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < m; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        // add row i to row t and retry
                        for (std::size_t k = 0; k < m; ++k) D[t][k] += D[i][k];
                        for (std::size_t k = 0; k < n; ++k) U[t][k] += U[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : U[t]) x = -x;
        }
    }
done:
    SmithResult r;
    for (std::size_t i = 0; i < std::min(n, m); ++i)
        if (D[i][i] != 0) r.divisors.push_back(D[i][i]);
    r.rank = r.divisors.size();
    r.U = std::move(U);
    r.V = std::move(V);
    r.D = std::move(D);
    return r;
}

// Rows are exponent vectors v together with a sign bit b, standing for the
// identity x^v = (-1)^b among units.  Kept in Hermite normal form, which gives
// canonical coset representatives modulo the row lattice.
class SignedLattice {
public:
    explicit SignedLattice(std::size_t columns = 0) : cols_(columns) {}

    std::size_t columns() const { return cols_; }

    void add(std::vector<long long> v, int bit) {
        rows_.push_back(std::move(v));
        bits_.push_back(bit & 1);
        dirty_ = true;
    }

    // false iff the relations force -1 = 1, i.e. a zero vector with bit 1
    bool consistent() const {
        normalize();
        return consistent_;
    }
    std::size_t lattice_rank() const {
        normalize();
        return pivots_.size();
    }
    std::size_t free_rank() const { return cols_ - lattice_rank(); }
    const IntMatrix& hermite_rows() const {
        normalize();
        return hnf_;
    }
    const std::vector<int>& hermite_bits() const {
        normalize();
        return hnf_bits_;
    }
    const IntMatrix& raw_rows() const { return rows_; }
    const std::vector<int>& raw_bits() const { return bits_; }

    // canonical representative of (v, b) modulo the lattice
    std::pair<std::vector<long long>, int> reduce(std::vector<long long> v, int b) const {
        normalize();
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            std::size_t c = pivots_[k];
            long long q = detail::floor_div(v[c], hnf_[k][c]);
            if (q == 0) continue;
            detail::axpy(v, hnf_[k], q);
            b ^= static_cast<int>(q & 1) & hnf_bits_[k];
        }
        return {std::move(v), b & 1};
    }

    std::vector<long long> torsion() const {
        normalize();
        auto s = smith_normal_form(hnf_, cols_);
        std::vector<long long> t;
        for (auto d : s.divisors)
            if (d > 1) t.push_back(d);
        return t;
    }

private:
    void normalize() const {
        if (!dirty_) return;
        IntMatrix a = rows_;
        std::vector<int> bits = bits_;
        std::vector<std::size_t> piv;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < a.size(); ++c) {
            for (;;) {
                std::size_t best = a.size();
                for (std::size_t i = r; i < a.size(); ++i)
                    if (a[i][c] != 0 && (best == a.size() || std::llabs(a[i][c]) < std::llabs(a[best][c])))
                        best = i;
                if (best == a.size()) break;
                std::swap(a[r], a[best]);
                std::swap(bits[r], bits[best]);
                bool done = true;
                for (std::size_t i = r + 1; i < a.size(); ++i) {
                    if (a[i][c] == 0) continue;
                    long long q = detail::floor_div(a[i][c], a[r][c]);
                    detail::axpy(a[i], a[r], q);
                    bits[i] ^= static_cast<int>(q & 1) & bits[r];
                    if (a[i][c] != 0) done = false;
                }
                if (done) break;
            }
            if (r < a.size() && a[r][c] != 0) {
                if (a[r][c] < 0)
                    for (auto& x : a[r]) x = -x;
                for (std::size_t i = 0; i < r; ++i) {
                    long long q = detail::floor_div(a[i][c], a[r][c]);
                    detail::axpy(a[i], a[r], q);
                    bits[i] ^= static_cast<int>(q & 1) & bits[r];
                }
                piv.push_back(c);
                ++r;
            }
        }
        consistent_ = true;
        for (std::size_t i = r; i < a.size(); ++i)
            if (bits[i]) consistent_ = false;
        a.resize(r);
        bits.resize(r);
        hnf_ = std::move(a);
        hnf_bits_ = std::move(bits);
        pivots_ = std::move(piv);
        dirty_ = false;
    }

    std::size_t cols_;
    IntMatrix rows_;
    std::vector<int> bits_;
    mutable bool dirty_ = true;
    mutable bool consistent_ = true;
    mutable IntMatrix hnf_;
    mutable std::vector<int> hnf_bits_;
    mutable std::vector<std::size_t> pivots_;
};

// Basis of {c : c * M = 0} (left kernel) over Z.
inline IntMatrix integer_left_kernel(const IntMatrix& M, std::size_t cols) {
    const std::size_t n = M.size();
    // augment [M | I] and row-reduce the M part
    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = M[i];
        a[i].resize(cols + n, 0);
        a[i][cols + i] = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i)
                if (a[i][c] != 0 && (best == n || std::llabs(a[i][c]) < std::llabs(a[best][c]))) best = i;
            if (best == n) break;
            std::swap(a[r], a[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (a[i][c] == 0) continue;
                detail::axpy(a[i], a[r], detail::floor_div(a[i][c], a[r][c]));
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < n && a[r][c] != 0) ++r;
    }
    IntMatrix ker;
    for (std::size_t i = r; i < n; ++i) ker.emplace_back(a[i].begin() + static_cast<long>(cols), a[i].end());
    return ker;
}

}  // namespace f1tits
