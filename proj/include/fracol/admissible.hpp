#pragma once

#include "fracol/graph.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace fracol {

/// X = X1 ∪ X2 ∪ X3 with pairwise-disjoint parts (any may be empty).
struct AdmissibleTriple {
    std::array<VertexSet, 3> parts;

    VertexSet members() const;
    bool empty() const noexcept { return parts[0].empty() && parts[1].empty() && parts[2].empty(); }
    bool operator==(const AdmissibleTriple&) const = default;
};

/// Simple-path neighborhoods N^1..N^5 for every vertex, computed once.
class DistanceTable {
public:
    explicit DistanceTable(const Graph& g);

    const VertexSet& at(Vertex u, int length) const { return sets_.at(u).at(length - 1); }
    bool reaches(Vertex u, Vertex v, int length) const;

private:
    std::vector<std::array<VertexSet, 5>> sets_;
};

/// Same part: no simple path of length 1, 3 or 5 between the two vertices.
/// Different parts: none of length 1, 2 or 4. Reports the first bad pair.
Check is_admissible(const Graph& g, const AdmissibleTriple& t);
Check is_admissible(const Graph& g, const DistanceTable& table, const AdmissibleTriple& t);

/// Vertex order ending with (second_last, last) in which every suffix induces
/// a connected subgraph. Each step removes a vertex farthest from `last`, a
/// leaf of the BFS tree, so the rest stays connected. Requires a connected g
/// and adjacent reserved vertices.
std::vector<Vertex> elimination_order(const Graph& g, Vertex second_last, Vertex last);

inline constexpr int partition_palette = 126;
inline constexpr int partition_blocks = partition_palette / 3;

struct GreedyPartition {
    std::vector<AdmissibleTriple> triples;  // nonempty color blocks, in block order
    std::vector<int> blocks;                // 1-based color block of each triple
    std::vector<int> coloring;              // per vertex, in 1..126
    std::vector<Vertex> order;              // greedy coloring order
    std::vector<int> forbidden;             // forbidden-color count at each step of `order`
    std::vector<Vertex> witness_cycle;      // short cycle holding the last two vertices

    int max_forbidden_before_endgame() const;
    std::array<int, 2> endgame_forbidden() const;
};

/// Worst-case forbidden-color count for the last two vertices when they lie
/// on a cycle of the given length (4, 5 or 6).
int endgame_bound(int cycle_length);

/// Greedy proper 126-coloring whose color blocks {3i-2, 3i-1, 3i} are
/// admissible triples. Requires g triangle-free, max degree 3, 2-connected,
/// girth at most 6. Seed 0 prefers the smallest feasible color; other seeds
/// shuffle the color preference and the reserved edge of the witness cycle.
GreedyPartition greedy_partition(const Graph& g, std::uint64_t seed = 0);

nlohmann::json to_json(const AdmissibleTriple& t);
nlohmann::json to_json(const std::vector<AdmissibleTriple>& triples);
std::vector<AdmissibleTriple> partition_from_json(const nlohmann::json& j);

}  // namespace fracol
