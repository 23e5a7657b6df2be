#include "sgx/simplex.hpp"

#include <stdexcept>

namespace sgx {

std::optional<std::vector<Rational>> simplex_feasible(std::vector<std::vector<Rational>> A,
                                                      std::vector<Rational> b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("row count mismatch");
    const std::size_t nv = m == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != nv) throw std::invalid_argument("ragged constraint matrix");
    if (m == 0) return std::vector<Rational>(nv, Rational(0));

    // Tableau: original columns, one artificial per row, rhs last.
    const std::size_t cols = nv + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < nv; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
        t[i][nv + i] = 1;
        t[i][cols - 1] = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = nv + i;

    // Reduced costs for minimizing the sum of artificials; r[cols-1] carries
    // the negated objective value.
    std::vector<Rational> r(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        if (j < nv || j == cols - 1) r[j] = -s;
    }

    while (true) {
        // Bland: entering = lowest-index original column with negative reduced
        // cost. Artificials never re-enter; for a feasibility verdict that is
        // safe (any zero-objective point has every artificial at zero).
        std::size_t enter = cols;
        for (std::size_t j = 0; j < nv; ++j) {
            if (r[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        // Ratio test; Bland tie-break on the smallest basis index.
        std::size_t leave = m;
        Rational best = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("phase-1 objective unbounded");

        // Pivot on (leave, enter).
        const Rational piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (r[enter] != 0) {
            const Rational f = r[enter];
            for (std::size_t j = 0; j < cols; ++j) r[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // Objective value is -r[cols-1]; positive means infeasible.
    if (-r[cols - 1] != 0) return std::nullopt;

    std::vector<Rational> x(nv, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < nv) x[basis[i]] = t[i][cols - 1];
    return x;
}

}  // namespace sgx
