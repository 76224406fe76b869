#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric::lp {

/**
 * Finds x >= 0 with A x = b, or reports that none exists.
 *
 * Phase-one simplex on a dense rational tableau with one artificial
 * variable per row. Entering and leaving variables follow Bland's rule
 * (lowest index first), which rules out cycling on the degenerate
 * homogeneous systems that fan problems produce.
 *
 * A is row-major with rows.size() == b.size(); every row has the same length.
 */
inline std::optional<RationalVector> find_nonnegative_solution(const RatMatrix& a,
                                                               const RationalVector& b)
{
    const std::size_t m = a.size();
    if (b.size() != m)
        throw DimensionMismatch("find_nonnegative_solution: rhs length differs from row count");
    const std::size_t n = m == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != n)
            throw DimensionMismatch("find_nonnegative_solution: ragged matrix");
    if (m == 0)
        return RationalVector(n, Rational(0));

    // columns: [0, n) structural, [n, n+m) artificial, last column is rhs
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;
    RatMatrix t(m, RationalVector(width, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][n + i] = 1;
        t[i][rhs] = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = n + i;

    // reduced costs of min sum(artificials): c_j - 1^T column_j
    RationalVector cost(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < n || j == rhs)
                cost[j] -= t[i][j];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width)
            break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            const Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        // phase one is bounded below by zero, so a ratio row always exists
        if (leave == m)
            throw InvariantViolation("find_nonnegative_solution: unbounded phase-one problem");

        const Rational piv = t[leave][enter];
        for (std::size_t j = 0; j < width; ++j)
            t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // cost[rhs] holds minus the optimal artificial sum
    if (cost[rhs] != 0)
        return std::nullopt;

    RationalVector x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            x[basis[i]] = t[i][rhs];
    return x;
}

/** Exact check that x >= 0 and A x == b. */
inline bool is_nonnegative_solution(const RatMatrix& a, const RationalVector& b,
                                    const RationalVector& x)
{
    for (const auto& xi : x)
        if (xi < 0)
            return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (dot(a[i], x) != b[i])
            return false;
    return true;
}

} // namespace toric::lp
