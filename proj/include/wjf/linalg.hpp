#pragma once

#include <cstddef>
#include <vector>

#include "wjf/rational.hpp"

namespace wjf {

// Outcome of an exact linear solve A x = b over the rationals.
// When consistent, `particular` is the solution with every free variable
// set to zero and `nullspace` holds one reduced-echelon basis vector per
// free column (so the solution set is particular + span(nullspace)).
struct LinearSystemSolution {
    bool consistent = false;
    std::size_t rank = 0;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> nullspace;
};

// Gauss-Jordan elimination with deterministic first-nonzero pivoting.
// All arithmetic is exact; the systems in this project are tiny (tens of
// unknowns at most).
inline LinearSystemSolution solve_exact(std::vector<std::vector<Rational>> a,
                                        std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();

    std::vector<std::size_t> pivot_col;  // per pivot row, its column
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
        b[r] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearSystemSolution out;
    out.rank = r;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return out;  // inconsistent
    out.consistent = true;

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    out.particular.assign(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) out.particular[pivot_col[i]] = b[i];

    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[c] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][c];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

}  // namespace wjf
