#pragma once

#include "fracol/admissible.hpp"
#include "fracol/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fracol {

/// G'(X): G with X deleted, each Y_j = Γ(X_j) identified into hub y_j, and
/// the hubs joined in a triangle. Non-hub quotient vertices keep the
/// ascending order of the original vertices they come from; hubs are the
/// last three vertices.
struct AuxGraph {
    Graph quotient;
    std::array<Vertex, 3> hubs{};
    std::vector<VertexSet> back_map;  // per quotient vertex
    std::vector<Vertex> quotient_of;  // per original vertex; -1 for X
};

/// Throws Error(invalid_input) for a non-admissible triple.
AuxGraph build_aux(const Graph& g, const AdmissibleTriple& t);

enum class ColorStatus { colorable, not_colorable, undecided };

inline constexpr std::uint64_t default_node_budget = 10'000'000;

struct ColoringSearch {
    ColorStatus status = ColorStatus::undecided;
    std::vector<int> colors;  // 0..k-1 per vertex when colorable
    std::uint64_t nodes = 0;
};

/// Exact k-coloring by DSATUR-ordered backtracking. `fixed` pins colors;
/// fresh colors are tried one at a time since unused colors are
/// interchangeable.
ColoringSearch find_coloring(const Graph& g, int k, std::span<const std::pair<Vertex, int>> fixed = {},
                             std::uint64_t node_budget = default_node_budget);

int chromatic_number(const Graph& g);

struct ThreeColorResult {
    ColorStatus status = ColorStatus::undecided;
    std::vector<int> colors;          // 0..2 per quotient vertex
    std::vector<Edge> critical_hint;  // edge set of an edge-minimal non-3-colorable subgraph
};

/// Proper 3-coloring of g if one exists. When hubs are given they form a
/// triangle and are pinned to colors 0, 1, 2.
ThreeColorResult three_color(const Graph& g, std::optional<std::array<Vertex, 3>> hubs = std::nullopt,
                             std::uint64_t node_budget = default_node_budget);

/// Odd cycle x_0..x_2k, each x_i joined to exactly one of three mutually
/// adjacent hubs. attachment[i] in {1, 2, 3}; at most one hub unused.
struct HubSplitInstance {
    int k = 0;
    std::vector<int> attachment;
};

Check check_instance(const HubSplitInstance& inst);

/// Cycle positions are vertices 0..2k; hub h is vertex 2k + h.
Graph hub_split_graph(const HubSplitInstance& inst);

enum class IntervalType { I, II, III, IV, empty };

const char* to_string(IntervalType type);

/// A maximal run of cycle positions strictly between two consecutive hub-1
/// spokes (left_spoke == right_spoke when hub 1 has a single spoke).
struct Interval {
    int left_spoke = 0;
    int right_spoke = 0;
    std::vector<int> positions;
    IntervalType type = IntervalType::empty;
    bool degenerate = false;  // only one of y2 / y3 appears
};

/// Intervals between hub-1 spokes, walking forward from `start_spoke`. The
/// type depends on the first and last hub met (y2..y2 I, y2..y3 II,
/// y3..y2 III, y3..y3 IV), which is what survives collapsing repeats.
std::vector<Interval> classify_intervals(const HubSplitInstance& inst, int start_spoke);

/// Whether a spoke coloring (c(u), c(v)) in {2,3}^2 always extends into an
/// interval of the given type.
bool interval_extends(IntervalType type, int left_color, int right_color);

/// Constructive 3-coloring of the hub-split graph; hub h receives color h
/// and all colors are in 1..3. Indexing follows hub_split_graph.
std::vector<int> hub_split_three_color(const HubSplitInstance& inst);

}  // namespace fracol
