#include "fracol/lp.hpp"

#include "fracol/simplex.hpp"

#include <algorithm>
#include <map>

namespace fracol {

FractionalChromatic fractional_chromatic_number(const Graph& g, std::size_t mis_cap) {
    FractionalChromatic out;
    if (g.order() == 0) {
        return out;
    }
    const auto sets = maximal_independent_sets(g, mis_cap);
    LinearProgram lp;
    lp.objective.assign(static_cast<std::size_t>(g.order()), 1);
    lp.rhs.assign(sets.size(), 1);
    lp.constraints.assign(sets.size(), std::vector<Rational>(static_cast<std::size_t>(g.order())));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (Vertex v : sets[i]) {
            lp.constraints[i][v] = 1;
        }
    }
    const auto result = maximize(lp);
    out.value = result.value;
    out.solution.objective = result.value;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (result.dual[i] > 0) {
            out.solution.weights.emplace_back(sets[i], result.dual[i]);
        }
    }
    if (auto check = check_lp_solution(g, out.solution); !check) {
        throw Error(ErrorKind::internal, "simplex returned an infeasible cover: " + check.reason);
    }
    return out;
}

Check check_lp_solution(const Graph& g, const LpSolution& sol) {
    std::vector<Rational> coverage(static_cast<std::size_t>(g.order()));
    Rational total = 0;
    for (const auto& [set, w] : sol.weights) {
        if (w < 0) {
            return Check::fail("negative weight");
        }
        for (Vertex v : set) {
            if (!g.contains(v)) {
                return Check::fail("set mentions vertex " + std::to_string(v) + " outside the graph");
            }
            coverage[v] += w;
        }
        if (!is_independent(g, set)) {
            return Check::fail("weighted set is not independent");
        }
        total += w;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (coverage[v] < 1) {
            return Check::fail("vertex " + std::to_string(v) + " covered only " + to_string(coverage[v]));
        }
    }
    if (total != sol.objective) {
        return Check::fail("objective " + to_string(sol.objective) + " differs from total weight " + to_string(total));
    }
    return Check::pass();
}

FoldColoring extract_ab_coloring(const Graph& g, const LpSolution& sol) {
    if (auto check = check_lp_solution(g, sol); !check) {
        throw Error(ErrorKind::invalid_input, "extract_ab_coloring: " + check.reason);
    }
    auto weights = sol.weights;
    std::sort(weights.begin(), weights.end());
    Integer fold = 1;
    for (const auto& [set, w] : weights) {
        fold = lcm(fold, Integer(denominator(w)));
    }
    const int b = fold.convert_to<int>();

    // colors_of[set index] = ids contributed by that set
    std::vector<std::vector<Color>> colors_of(weights.size());
    Color next = 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const Rational copies = weights[i].second * b;
        const auto count = numerator(copies).convert_to<long long>();
        for (long long k = 0; k < count; ++k) {
            colors_of[i].push_back(next++);
        }
    }

    std::map<Vertex, std::vector<Color>> assignment;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<std::size_t> holding;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (std::binary_search(weights[i].first.begin(), weights[i].first.end(), v)) {
                holding.push_back(i);
            }
        }
        std::size_t have = 0;
        for (auto i : holding) {
            have += colors_of[i].size();
        }
        std::size_t excess = have - static_cast<std::size_t>(b);
        std::vector<Color> list;
        for (auto it = holding.rbegin(); it != holding.rend(); ++it) {
            const auto& ids = colors_of[*it];
            const std::size_t drop = std::min(excess, ids.size());
            excess -= drop;
            list.insert(list.end(), ids.begin(), ids.end() - static_cast<std::ptrdiff_t>(drop));
        }
        assignment.emplace(v, std::move(list));
    }
    FoldColoring c(b, std::move(assignment));
    if (auto check = validate(g, c); !check) {
        throw Error(ErrorKind::internal, "extracted coloring is invalid: " + check.reason);
    }
    if (gvalue(c) != sol.objective) {
        throw Error(ErrorKind::internal, "extracted coloring uses " + std::to_string(c.palette_size()) +
                                             " colors; the solution is not optimal");
    }
    return c;
}

namespace {

VertexSet sorted_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Rational chi_f(const Graph& g, std::size_t cap) { return fractional_chromatic_number(g, cap).value; }

}  // namespace

CliqueCutReport check_clique_cut(const Graph& g, const VertexSet& part1, const VertexSet& part2,
                                 std::size_t mis_cap) {
    if (static_cast<int>(sorted_union(part1, part2).size()) != g.order()) {
        throw Error(ErrorKind::invalid_input, "clique cut: parts do not cover every vertex");
    }
    VertexSet overlap;
    std::set_intersection(part1.begin(), part1.end(), part2.begin(), part2.end(), std::back_inserter(overlap));
    if (overlap.empty()) {
        throw Error(ErrorKind::invalid_input, "clique cut: parts do not overlap");
    }
    for (std::size_t i = 0; i < overlap.size(); ++i) {
        for (std::size_t j = i + 1; j < overlap.size(); ++j) {
            if (!g.adjacent(overlap[i], overlap[j])) {
                throw Error(ErrorKind::invalid_input, "clique cut: overlap is not complete");
            }
        }
    }
    for (auto [u, v] : g.edges()) {
        const bool in1 = std::binary_search(part1.begin(), part1.end(), u) &&
                         std::binary_search(part1.begin(), part1.end(), v);
        const bool in2 = std::binary_search(part2.begin(), part2.end(), u) &&
                         std::binary_search(part2.begin(), part2.end(), v);
        if (!in1 && !in2) {
            throw Error(ErrorKind::invalid_input, "clique cut: edge (" + std::to_string(u) + ", " +
                                                      std::to_string(v) + ") lies in neither part");
        }
    }
    CliqueCutReport report;
    report.whole = chi_f(g, mis_cap);
    report.side1 = chi_f(induced_subgraph(g, part1), mis_cap);
    report.side2 = chi_f(induced_subgraph(g, part2), mis_cap);
    report.holds = report.whole == std::max(report.side1, report.side2);
    return report;
}

TwoCutReport check_two_cut(const Graph& g, Vertex u, Vertex v, std::size_t mis_cap) {
    if (!g.contains(u) || !g.contains(v) || u == v) {
        throw Error(ErrorKind::invalid_input, "two cut: need two distinct vertices of the graph");
    }
    if (g.adjacent(u, v)) {
        throw Error(ErrorKind::invalid_input, "two cut: u and v are adjacent; contracting them would create a self-loop");
    }
    VertexSet rest;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (x != u && x != v) {
            rest.push_back(x);
        }
    }
    const auto comps = connected_components(induced_subgraph(g, rest));
    if (comps.size() < 2) {
        throw Error(ErrorKind::invalid_input, "two cut: {u, v} does not separate the graph");
    }
    TwoCutReport report;
    VertexSet pair{std::min(u, v), std::max(u, v)};
    VertexSet first;
    for (Vertex local : comps.front()) {
        first.push_back(rest[local]);
    }
    VertexSet second;
    for (std::size_t c = 1; c < comps.size(); ++c) {
        for (Vertex local : comps[c]) {
            second.push_back(rest[local]);
        }
    }
    std::sort(second.begin(), second.end());
    report.part1 = sorted_union(first, pair);
    report.part2 = sorted_union(second, pair);

    const Graph g2 = induced_subgraph(g, report.part2);
    const auto local_of = [&](Vertex x) {
        return static_cast<Vertex>(std::lower_bound(report.part2.begin(), report.part2.end(), x) -
                                   report.part2.begin());
    };
    report.whole = chi_f(g, mis_cap);
    report.side1 = chi_f(induced_subgraph(g, report.part1), mis_cap);
    report.side2_plus_edge = chi_f(add_edge(g2, local_of(u), local_of(v)), mis_cap);
    report.side2_contracted = chi_f(contract_pair(g2, local_of(u), local_of(v)), mis_cap);
    report.holds = report.whole <= std::max({report.side1, report.side2_plus_edge, report.side2_contracted});
    return report;
}

nlohmann::json to_json(const LpSolution& sol) {
    auto weights = sol.weights;
    std::sort(weights.begin(), weights.end());
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [set, w] : weights) {
        out.push_back({{"set", set}, {"weight", to_string(w)}});
    }
    return out;
}

LpSolution lp_solution_from_json(const nlohmann::json& j) {
    LpSolution sol;
    try {
        for (const auto& entry : j) {
            auto set = entry.at("set").get<VertexSet>();
            auto w = parse_rational(entry.at("weight").get<std::string>());
            sol.objective += w;
            sol.weights.emplace_back(std::move(set), std::move(w));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::invalid_input, std::string("malformed LP solution: ") + e.what());
    }
    std::sort(sol.weights.begin(), sol.weights.end());
    return sol;
}

}  // namespace fracol
