#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "numeric.hpp"

namespace semicm {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;
using IntMatrix = std::vector<IntVec>;  // row-major

inline std::size_t rational_rank(RatMatrix m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rat f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t integer_rank(const IntMatrix& m) {
    RatMatrix q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i].assign(m[i].begin(), m[i].end());
    return rational_rank(std::move(q));
}

// Basis of { v in Z^n : M v = 0 } for an integer matrix M (d rows, n cols),
// by unimodular column reduction. The kernel lattice is saturated, so the
// returned basis vectors automatically have content 1; each is sign-fixed so
// its first nonzero entry is positive, and the basis is sorted.
inline std::vector<IntVec> integer_kernel(const IntMatrix& m_in) {
    const std::size_t rows = m_in.size();
    const std::size_t cols = rows ? m_in[0].size() : 0;
    if (cols == 0) return {};
    IntMatrix a = m_in;
    // u: n x n unimodular transform, columns tracked alongside a's columns
    IntMatrix u(cols, IntVec(cols, Int(0)));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < rows; ++r) a[r][dst] -= q * a[r][src];
        for (std::size_t r = 0; r < cols; ++r) u[r][dst] -= q * u[r][src];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(u[r][i], u[r][j]);
    };

    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < cols; ++r) {
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = lead; c < cols; ++c)
                if (a[r][c] != 0 &&
                    (best == cols ||
                     boost::multiprecision::abs(a[r][c]) < boost::multiprecision::abs(a[r][best])))
                    best = c;
            if (best == cols) break;  // row clear from `lead` on
            col_swap(lead, best);
            bool reduced_all = true;
            for (std::size_t c = lead + 1; c < cols; ++c) {
                if (a[r][c] == 0) continue;
                const Int q = a[r][c] / a[r][lead];  // truncated division
                if (q != 0) col_sub(c, lead, q);
                if (a[r][c] != 0) reduced_all = false;
            }
            if (reduced_all) {
                ++lead;
                break;
            }
        }
    }

    std::vector<IntVec> basis;
    for (std::size_t c = lead; c < cols; ++c) {
        IntVec v(cols);
        bool zero_col = true;
        for (std::size_t r = 0; r < rows; ++r)
            if (a[r][c] != 0) zero_col = false;
        SEMICM_CHECK(zero_col, "integer_kernel: trailing column not annihilated");
        for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][c];
        const Int g = vec_content(v);
        SEMICM_CHECK(g == 1, "integer_kernel: basis vector with content > 1");
        for (std::size_t r = 0; r < cols; ++r)
            if (v[r] != 0) {
                if (v[r] < 0)
                    for (auto& x : v) x = -x;
                break;
            }
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

// Unique solution of A x = b for a full-column-rank A; nullopt when
// inconsistent.
inline std::optional<RatVec> rational_solve(RatMatrix a, RatVec b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        std::swap(b[rank], b[piv]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rat f = a[r][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank < cols) throw precondition_error("rational_solve: matrix not of full column rank");
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
    return x;
}

inline Rat rational_det(RatMatrix m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rat f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

// ---- Fourier-Motzkin -------------------------------------------------------

// A row (a_0 .. a_{n-1} | b) encodes a.x <= b.
using IneqRow = RatVec;

inline IneqRow normalize_row(IneqRow r) {
    for (const Rat& x : r)
        if (x != 0) {
            const Rat s = boost::multiprecision::abs(x);
            for (auto& y : r) y /= s;
            break;
        }
    return r;
}

// Exact feasibility of { x : A x <= b } by eliminating all variables.
inline bool fm_feasible(std::vector<IneqRow> rows, std::size_t nvars) {
    for (std::size_t k = 0; k < nvars; ++k) {
        std::vector<IneqRow> pos, neg;
        std::set<IneqRow> keep;
        for (auto& r : rows) {
            if (r[k] > 0)
                pos.push_back(std::move(r));
            else if (r[k] < 0)
                neg.push_back(std::move(r));
            else
                keep.insert(normalize_row(std::move(r)));
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                IneqRow r(p.size());
                // p[k] * n - n[k] * p has zero k-th entry; p[k] > 0 > n[k]
                for (std::size_t j = 0; j < r.size(); ++j) r[j] = p[k] * n[j] - n[k] * p[j];
                keep.insert(normalize_row(std::move(r)));
            }
        rows.assign(keep.begin(), keep.end());
    }
    for (const auto& r : rows)
        if (r.back() < 0) return false;
    return true;
}

// Is `target` a nonnegative rational combination of `rays`? Exact, via
// Fourier-Motzkin on the multipliers.
inline bool cone_contains(const std::vector<IntVec>& rays, const IntVec& target) {
    if (rays.empty()) return vec_is_zero(target);
    const std::size_t m = rays.size();
    const std::size_t d = target.size();
    std::vector<IneqRow> rows;
    for (std::size_t i = 0; i < d; ++i) {
        IneqRow up(m + 1), dn(m + 1);
        for (std::size_t j = 0; j < m; ++j) {
            require_same_size(rays[j], target);
            up[j] = Rat(rays[j][i]);
            dn[j] = Rat(-rays[j][i]);
        }
        up[m] = Rat(target[i]);
        dn[m] = Rat(-target[i]);
        rows.push_back(std::move(up));
        rows.push_back(std::move(dn));
    }
    for (std::size_t j = 0; j < m; ++j) {
        IneqRow r(m + 1, Rat(0));
        r[j] = Rat(-1);
        rows.push_back(std::move(r));
    }
    return fm_feasible(std::move(rows), m);
}

}  // namespace semicm
