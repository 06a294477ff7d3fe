#pragma once

#include "fracol/common.hpp"

#include <vector>

namespace fracol {

/// maximize objective·y  subject to  constraints·y <= rhs,  y >= 0,
/// with rhs >= 0 so the origin is a feasible starting vertex.
struct LinearProgram {
    std::vector<std::vector<Rational>> constraints;  // rows x variables
    std::vector<Rational> rhs;
    std::vector<Rational> objective;
};

struct SimplexResult {
    Rational value;
    std::vector<Rational> primal;  // optimal y
    std::vector<Rational> dual;    // one multiplier per constraint row
    std::size_t pivots = 0;
};

/// Exact dictionary simplex with Bland's rule. Throws Error(invalid_input)
/// for a negative right-hand side and Error(out_of_scope) if unbounded.
SimplexResult maximize(const LinearProgram& lp);

}  // namespace fracol
