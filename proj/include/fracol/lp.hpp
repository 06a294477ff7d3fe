#pragma once

#include "fracol/fold_coloring.hpp"
#include "fracol/graph.hpp"

#include "json.hpp"

#include <utility>
#include <vector>

namespace fracol {

/// Optimal fractional cover by maximal independent sets. Only sets with
/// positive weight are stored, sorted by set.
struct LpSolution {
    std::vector<std::pair<VertexSet, Rational>> weights;
    Rational objective;
};

struct FractionalChromatic {
    Rational value;
    LpSolution solution;
};

/// Exact chi_f. The LP over maximal independent sets is solved through its
/// dual (max sum y_v, sum_{v in S} y_v <= 1), whose slack basis is feasible at
/// the origin; the cover weights are read off the final reduced costs.
/// Restricting to maximal sets loses nothing: weight on a set can always be
/// moved to any maximal superset.
FractionalChromatic fractional_chromatic_number(const Graph& g, std::size_t mis_cap = default_mis_cap);

/// Checks the LpSolution invariants against g (nonnegative weights,
/// independent sets, coverage >= 1, objective = total weight).
Check check_lp_solution(const Graph& g, const LpSolution& sol);

/// a:b coloring realizing an LP solution: b is the lcm of the weight
/// denominators and each set S contributes b*w(S) fresh colors to its
/// members. Over-covered vertices drop colors of the lexicographically
/// largest sets first until they keep exactly b.
FoldColoring extract_ab_coloring(const Graph& g, const LpSolution& sol);

struct CliqueCutReport {
    bool holds = false;
    Rational whole, side1, side2;
    explicit operator bool() const noexcept { return holds; }
};

/// chi_f(G) = max(chi_f(G[part1]), chi_f(G[part2])) when the parts overlap in
/// a clique and cover every edge. Throws Error(invalid_input) if not a clique cut.
CliqueCutReport check_clique_cut(const Graph& g, const VertexSet& part1, const VertexSet& part2,
                                 std::size_t mis_cap = default_mis_cap);

struct TwoCutReport {
    bool holds = false;
    Rational whole, side1, side2_plus_edge, side2_contracted;
    VertexSet part1, part2;
    explicit operator bool() const noexcept { return holds; }
};

/// chi_f(G) <= max(chi_f(G1), chi_f(G2 + uv), chi_f(G2 / uv)) for a
/// non-adjacent 2-cut {u, v}. G1 is the first component of G - {u, v}
/// (by smallest vertex) plus u, v; G2 is everything else plus u, v.
TwoCutReport check_two_cut(const Graph& g, Vertex u, Vertex v, std::size_t mis_cap = default_mis_cap);

nlohmann::json to_json(const LpSolution& sol);
LpSolution lp_solution_from_json(const nlohmann::json& j);

}  // namespace fracol
