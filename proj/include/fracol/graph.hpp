#pragma once

#include "fracol/common.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fracol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; every structural query is a free function.
class Graph {
public:
    Graph() = default;

    /// Collapses duplicate pairs. Throws Error(invalid_input) on an
    /// out-of-range endpoint or a self-loop, naming the offending edge.
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    int max_degree() const noexcept;
    bool adjacent(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

Graph build_graph(int n, std::span<const Edge> edges);

/// Vertices v != u joined to u by a simple path with exactly `length` edges.
/// Requires 1 <= length <= 5.
VertexSet distance_neighborhood(const Graph& g, Vertex u, int length);

struct GirthResult {
    std::optional<int> length;   // nullopt for forests
    std::vector<Vertex> cycle;   // lexicographically smallest shortest cycle
};

GirthResult girth(const Graph& g);

bool is_triangle_free(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

struct BlockDecomposition {
    /// Maximal 2-connected subgraphs (bridges as 2-vertex blocks, isolated
    /// vertices as 1-vertex blocks), each sorted; list sorted.
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
};

BlockDecomposition blocks(const Graph& g);

bool is_biconnected(const Graph& g);

/// True iff every block is complete or an odd cycle and every degree is at most k-1.
bool is_gallai_forest(const Graph& g, int k);

/// Identifies u and v. The merged vertex takes slot min(u, v); vertices above
/// max(u, v) shift down by one. Throws if u and v are adjacent.
Graph contract_pair(const Graph& g, Vertex u, Vertex v);

Graph add_edge(const Graph& g, Vertex u, Vertex v);

Graph complement(const Graph& g);

/// Induced subgraph on `vertices`; local vertex i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

inline constexpr std::size_t default_mis_cap = 100000;

/// All inclusion-maximal independent sets in lexicographic order.
/// Throws Error(resource_cap) once more than `cap` sets are found.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::size_t cap = default_mis_cap);

struct IndependenceResult {
    int size = 0;
    VertexSet witness;
};

IndependenceResult independence_number(const Graph& g);

int clique_number(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& set);

/// Canonical edge-list text: "n m" followed by one "u v" line per edge.
std::string to_edge_list(const Graph& g);

/// Parses the edge-list text format. Throws Error(invalid_input).
Graph parse_edge_list(std::string_view text);

/// FNV-1a 64 of the canonical edge list, as 16 lowercase hex digits.
std::string graph_hash(const Graph& g);

}  // namespace fracol
