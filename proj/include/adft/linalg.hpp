#pragma once

// Exact Gaussian elimination over Q. Used for Gram systems (dual basis),
// field inversion and subfield membership; sizes are phi(N) at desk scale,
// so a plain fraction elimination is plenty.

#include <optional>
#include <vector>

#include "adft/rational.hpp"

namespace adft {

using RatRows = std::vector<std::vector<Rat>>;

// Solves A x = b for A (m x k), m >= k. Returns the unique solution when A
// has full column rank and the system is consistent; nullopt otherwise.
inline std::optional<std::vector<Rat>> solve_linear(RatRows a, std::vector<Rat> b) {
    const std::size_t m = a.size();
    const std::size_t k = m == 0 ? 0 : a[0].size();
    if (b.size() != m) return std::nullopt;

    std::vector<std::size_t> pivot_row(k);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t sel = m;
        for (std::size_t r = rank; r < m; ++r) {
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == m) return std::nullopt;  // rank deficient
        std::swap(a[sel], a[rank]);
        std::swap(b[sel], b[rank]);
        const Rat inv_p = 1 / a[rank][col];
        for (std::size_t c = col; c < k; ++c) a[rank][c] *= inv_p;
        b[rank] *= inv_p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (std::size_t c = col; c < k; ++c) a[r][c] -= f * a[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    // Remaining rows must be annihilated for the system to be consistent.
    for (std::size_t r = rank; r < m; ++r)
        if (b[r] != 0) return std::nullopt;

    std::vector<Rat> x(k);
    for (std::size_t col = 0; col < k; ++col) x[col] = b[pivot_row[col]];
    return x;
}

}  // namespace adft
