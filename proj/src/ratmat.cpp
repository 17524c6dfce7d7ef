#include "dio/ratmat.hpp"

#include <algorithm>
#include <cstddef>

namespace dio {

RatMat rat_mat(int n) { return RatMat(n, std::vector<Rat>(n, Rat(0))); }

Inertia matrix_inertia(RatMat m) {
    const int n = static_cast<int>(m.size());
    Inertia out;
    int i = 0;
    while (i < n) {
        // Prefer a nonzero diagonal pivot.
        int pivot = -1;
        for (int j = i; j < n; ++j) {
            if (m[j][j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == -1) {
            // All remaining diagonal entries are zero; a nonzero off-diagonal
            // pair (r,s) forms a hyperbolic plane. Adding row/col s into r
            // makes m[r][r] = 2*m[r][s] != 0 and keeps congruence.
            int r = -1, s = -1;
            for (int a = i; a < n && r == -1; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (m[a][b] != 0) {
                        r = a;
                        s = b;
                        break;
                    }
            if (r == -1) {
                out.zero += n - i;
                return out;
            }
            for (int c = 0; c < n; ++c) m[r][c] += m[s][c];
            for (int c = 0; c < n; ++c) m[c][r] += m[c][s];
            continue;
        }
        if (pivot != i) {
            std::swap(m[pivot], m[i]);
            for (int r = 0; r < n; ++r) std::swap(m[r][pivot], m[r][i]);
        }
        const Rat d = m[i][i];
        if (d > 0)
            ++out.positive;
        else
            ++out.negative;
        std::vector<Rat> factors(n);
        for (int j = i + 1; j < n; ++j) factors[j] = m[j][i] / d;
        for (int j = i + 1; j < n; ++j) {
            if (factors[j] == 0) continue;
            for (int c = 0; c < n; ++c) m[j][c] -= factors[j] * m[i][c];
        }
        for (int j = i + 1; j < n; ++j) {
            if (factors[j] == 0) continue;
            for (int r = 0; r < n; ++r) m[r][j] -= factors[j] * m[r][i];
        }
        ++i;
    }
    return out;
}

Rat determinant(RatMat m) {
    const int n = static_cast<int>(m.size());
    Rat det = 1;
    for (int i = 0; i < n; ++i) {
        int pivot = -1;
        for (int r = i; r < n; ++r) {
            if (m[r][i] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == -1) return 0;
        if (pivot != i) {
            std::swap(m[pivot], m[i]);
            det = -det;
        }
        det *= m[i][i];
        for (int r = i + 1; r < n; ++r) {
            if (m[r][i] == 0) continue;
            Rat f = m[r][i] / m[i][i];
            for (int c = i; c < n; ++c) m[r][c] -= f * m[i][c];
        }
    }
    return det;
}

Rat principal_minor_sum(const RatMat& m, int r) {
    const int n = static_cast<int>(m.size());
    std::vector<int> pick(r);
    Rat total = 0;
    // Enumerate r-subsets of {0..n-1}.
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        RatMat sub = rat_mat(r);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) sub[a][b] = m[pick[a]][pick[b]];
        total += determinant(std::move(sub));
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

}  // namespace dio
