// Independent reference implementations used only by tests. These stay on
// plain int matrices and recursion so they share no code path with the
// bit-packed library routines they check.

#ifndef SEPCHK_TEST_ORACLES_HPP
#define SEPCHK_TEST_ORACLES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "sepchk/separation.hpp"
#include "sepchk/simplicial.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<int>>;

inline int gf2_rank(IntMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (m[i][c]) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        for (size_t i = 0; i < rows; ++i)
            if (static_cast<int>(i) != r && m[i][c])
                for (size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

/// All vectors of the kernel, by exhaustive enumeration; 2^cols candidates.
inline std::vector<std::vector<int>> gf2_kernel_enumerated(const IntMatrix& m, int cols) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << cols); ++mask) {
        std::vector<int> x(cols);
        for (int i = 0; i < cols; ++i) x[i] = (mask >> i) & 1;
        bool in_kernel = true;
        for (const auto& row : m) {
            int dot = 0;
            for (int i = 0; i < cols; ++i) dot ^= row[i] & x[i];
            if (dot) {
                in_kernel = false;
                break;
            }
        }
        if (in_kernel) out.push_back(std::move(x));
    }
    return out;
}

/// Boundary matrix rebuilt from scratch: faces found by erasing positions,
/// indices by linear search.
inline IntMatrix boundary_from_scratch(const sepchk::SimplicialComplex& x, int k) {
    const auto& rows = x.simplices(k - 1);
    const auto& cols = x.simplices(k);
    IntMatrix m(rows.size(), std::vector<int>(cols.size(), 0));
    for (size_t c = 0; c < cols.size(); ++c) {
        for (size_t drop = 0; drop < cols[c].size(); ++drop) {
            sepchk::Simplex face;
            for (size_t i = 0; i < cols[c].size(); ++i)
                if (i != drop) face.push_back(cols[c][i]);
            if (face.empty()) continue;
            for (size_t r = 0; r < rows.size(); ++r)
                if (rows[r] == face) m[r][c] ^= 1;
        }
    }
    return m;
}

/// dim H_k over GF(2) via rank-nullity on the from-scratch matrices.
inline int betti(const sepchk::SimplicialComplex& x, int k) {
    if (k < 0 || k > x.dim()) return 0;
    int nk = x.simplex_count(k);
    int rank_k = (k == 0) ? 0 : gf2_rank(boundary_from_scratch(x, k));
    int rank_k1 = (k + 1 > x.dim()) ? 0 : gf2_rank(boundary_from_scratch(x, k + 1));
    return (nk - rank_k) - rank_k1;
}

/// Kernel dimension of H^n(X) -> H^n(X-U) without the induced-map machinery:
/// dim ker = dim H^n(X) - rank(map), and the rank of the map equals
/// dim H^n(X) + dim H^n(X-U) - dim H^n of nothing... computed here directly
/// from cochain-level elimination instead:
///   rank(map) = rank [delta_{X-U} | restriction(cocycles of X)] - rank delta_{X-U}
inline int thm1_kernel_dim(const sepchk::SimplicialComplex& x, const sepchk::Simplex& cell) {
    using sepchk::Simplex;
    int n = x.dim();
    // cocycles of X at level n: kernel of delta^n = transpose of boundary_{n+1} = 0,
    // so every n-cochain is a cocycle; classes mod im delta^{n-1}
    const auto& xs = x.simplices(n);
    IntMatrix delta_x(xs.size(), std::vector<int>(x.simplex_count(n - 1), 0));
    {
        IntMatrix bd = boundary_from_scratch(x, n);
        for (size_t r = 0; r < bd.size(); ++r)
            for (size_t c = 0; c < bd[r].size(); ++c) delta_x[c][r] = bd[r][c];
    }
    // X-U simplices: everything except the cell
    std::vector<Simplex> xu;
    for (const auto& s : xs)
        if (s != cell) xu.push_back(s);
    IntMatrix delta_xu(xu.size(), std::vector<int>(x.simplex_count(n - 1), 0));
    for (size_t r = 0; r < xu.size(); ++r) {
        for (size_t c = 0; c < xs.size(); ++c)
            if (xs[c] == xu[r])
                for (size_t j = 0; j < delta_x[c].size(); ++j) delta_xu[r][j] = delta_x[c][j];
    }
    int hn_x = static_cast<int>(xs.size()) - gf2_rank(delta_x);
    // rank of the restriction on classes: adjoin restricted unit cochains of
    // X to the coboundary columns of X-U and count the rank growth
    size_t rows = xu.size();
    std::vector<std::vector<int>> base_cols;
    for (size_t j = 0; rows > 0 && j < delta_xu[0].size(); ++j) {
        std::vector<int> col(rows);
        for (size_t r = 0; r < rows; ++r) col[r] = delta_xu[r][j];
        base_cols.push_back(col);
    }
    std::vector<std::vector<int>> all_cols = base_cols;
    for (size_t c = 0; c < xs.size(); ++c) {
        std::vector<int> col(rows, 0);
        for (size_t r = 0; r < rows; ++r) col[r] = (xs[c] == xu[r]) ? 1 : 0;
        all_cols.push_back(col);
    }
    auto cols_to_matrix = [rows](const std::vector<std::vector<int>>& cols) {
        IntMatrix m(rows, std::vector<int>(cols.size(), 0));
        for (size_t c = 0; c < cols.size(); ++c)
            for (size_t r = 0; r < rows; ++r) m[r][c] = cols[c][r];
        return m;
    };
    int rank_base = rows == 0 ? 0 : gf2_rank(cols_to_matrix(base_cols));
    int rank_all = rows == 0 ? 0 : gf2_rank(cols_to_matrix(all_cols));
    int map_rank = rank_all - rank_base;
    return hn_x - map_rank;
}

/// Flood-fill labeling with an explicit stack, cross-checking the
/// union-find path. Returns component count including the infinity region.
inline int flood_fill_components(const sepchk::Grid& g) {
    long n = g.cell_count();
    std::vector<int> label(n, -2);  // -2 unvisited, -1 occupied
    for (long i = 0; i < n; ++i)
        if (g.occupied(i)) label[i] = -1;
    auto flood = [&](long start, int id) {
        std::vector<long> stack{start};
        label[start] = id;
        while (!stack.empty()) {
            long cur = stack.back();
            stack.pop_back();
            auto [i, j, k] = g.cell_of_index(cur);
            const int di[6] = {1, -1, 0, 0, 0, 0};
            const int dj[6] = {0, 0, 1, -1, 0, 0};
            const int dk[6] = {0, 0, 0, 0, 1, -1};
            int nn = g.ambient_dim() == 3 ? 6 : 4;
            for (int d = 0; d < nn; ++d) {
                int i2 = i + di[d], j2 = j + dj[d], k2 = k + dk[d];
                if (i2 < 0 || i2 >= g.nx() || j2 < 0 || j2 >= g.ny() || k2 < 0 || k2 >= g.nz())
                    continue;
                long idx = g.index(i2, j2, k2);
                if (label[idx] == -2) {
                    label[idx] = id;
                    stack.push_back(idx);
                }
            }
        }
    };
    // id 0 is the infinity region: all unoccupied boundary cells, plus the
    // notional outside of the box, which exists even when they are occupied
    for (long i = 0; i < n; ++i) {
        auto [ci, cj, ck] = g.cell_of_index(i);
        if (label[i] == -2 && g.on_boundary(ci, cj, ck)) flood(i, 0);
    }
    int count = 1;
    for (long i = 0; i < n; ++i)
        if (label[i] == -2) flood(i, count++);
    return count;
}

}  // namespace oracle

#endif
