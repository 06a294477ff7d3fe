#include "fracol/simplex.hpp"

#include <optional>

namespace fracol {

// Condensed dictionary: basic[i] = value[i] + sum_j coef[i][j] * nonbasic[j],
// z = z0 + sum_j reduced[j] * nonbasic[j]. Variable ids: 0..n-1 structural,
// n..n+m-1 slacks. Each pivot costs O(m n) instead of O(m (m + n)).
SimplexResult maximize(const LinearProgram& lp) {
    const std::size_t m = lp.constraints.size();
    const std::size_t n = lp.objective.size();
    if (lp.rhs.size() != m) {
        throw Error(ErrorKind::invalid_input, "simplex: rhs length does not match the constraint rows");
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.constraints[i].size() != n) {
            throw Error(ErrorKind::invalid_input, "simplex: ragged constraint matrix");
        }
        if (lp.rhs[i] < 0) {
            throw Error(ErrorKind::invalid_input, "simplex: negative right-hand side");
        }
    }

    std::vector<std::vector<Rational>> coef(m, std::vector<Rational>(n));
    std::vector<Rational> value = lp.rhs;
    std::vector<Rational> reduced = lp.objective;
    Rational z0 = 0;
    std::vector<std::size_t> basic(m), nonbasic(n);
    for (std::size_t i = 0; i < m; ++i) {
        basic[i] = n + i;
        for (std::size_t j = 0; j < n; ++j) {
            coef[i][j] = -lp.constraints[i][j];
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        nonbasic[j] = j;
    }

    SimplexResult result;
    while (true) {
        std::optional<std::size_t> enter;
        for (std::size_t j = 0; j < n; ++j) {
            if (reduced[j] > 0 && (!enter || nonbasic[j] < nonbasic[*enter])) {
                enter = j;
            }
        }
        if (!enter) {
            break;
        }
        const std::size_t e = *enter;
        std::optional<std::size_t> leave;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (coef[i][e] >= 0) {
                continue;
            }
            Rational ratio = value[i] / -coef[i][e];
            if (!leave || ratio < best_ratio || (ratio == best_ratio && basic[i] < basic[*leave])) {
                leave = i;
                best_ratio = std::move(ratio);
            }
        }
        if (!leave) {
            throw Error(ErrorKind::out_of_scope, "simplex: objective is unbounded");
        }
        const std::size_t r = *leave;

        // Solve row r for the entering variable.
        const Rational inv = 1 / coef[r][e];
        value[r] = -value[r] * inv;
        for (std::size_t j = 0; j < n; ++j) {
            coef[r][j] = j == e ? inv : Rational(-coef[r][j] * inv);
        }
        auto substitute = [&](std::vector<Rational>& row, Rational& constant) {
            const Rational factor = row[e];
            if (factor == 0) {
                return;
            }
            constant += factor * value[r];
            for (std::size_t j = 0; j < n; ++j) {
                row[j] = j == e ? Rational(factor * coef[r][j]) : Rational(row[j] + factor * coef[r][j]);
            }
        };
        for (std::size_t i = 0; i < m; ++i) {
            if (i != r) {
                substitute(coef[i], value[i]);
            }
        }
        substitute(reduced, z0);
        std::swap(basic[r], nonbasic[e]);
        ++result.pivots;
    }

    result.value = z0;
    result.primal.assign(n, 0);
    result.dual.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basic[i] < n) {
            result.primal[basic[i]] = value[i];
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (nonbasic[j] >= n) {
            result.dual[nonbasic[j] - n] = -reduced[j];
        }
    }
    return result;
}

}  // namespace fracol
