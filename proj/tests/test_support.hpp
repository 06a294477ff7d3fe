#pragma once

// Brute-force oracles and random instance builders shared by the test
// binaries. Nothing here calls into the library routines it is used to check.

#include "fracol/fold_coloring.hpp"
#include "fracol/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace fracol::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

// Random proper b-fold coloring: each vertex draws b colors from a palette of
// b*(max degree + 1) ids that its already-colored neighbors do not use.
inline FoldColoring random_fold_coloring(const Graph& g, int b, std::mt19937_64& rng) {
    const int palette = b * (g.max_degree() + 1);
    std::map<Vertex, std::vector<Color>> a;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<Color> free;
        for (Color c = 0; c < palette; ++c) {
            bool used = false;
            for (Vertex w : g.neighbors(v)) {
                if (auto it = a.find(w); it != a.end()) {
                    used = used || std::count(it->second.begin(), it->second.end(), c) > 0;
                }
            }
            if (!used) {
                free.push_back(c);
            }
        }
        std::shuffle(free.begin(), free.end(), rng);
        free.resize(static_cast<std::size_t>(b));
        a[v] = free;
    }
    return FoldColoring(b, a);
}

/// Every sequence of length+1 distinct vertices is tried by odometer
/// counting; keeps the end points of those that are walks in g.
inline VertexSet brute_distance_neighborhood(const Graph& g, Vertex u, int length) {
    const int n = g.order();
    std::vector<int> seq(static_cast<std::size_t>(length), 0);
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    while (true) {
        bool ok = true;
        Vertex prev = u;
        for (int i = 0; i < length && ok; ++i) {
            const Vertex x = seq[i];
            ok = x != u && g.adjacent(prev, x) && std::count(seq.begin(), seq.begin() + i, x) == 0;
            prev = x;
        }
        if (ok) {
            hit[seq.back()] = 1;
        }
        int pos = 0;
        while (pos < length && ++seq[pos] == n) {
            seq[pos++] = 0;
        }
        if (pos == length) {
            break;
        }
    }
    VertexSet out;
    for (Vertex v = 0; v < n; ++v) {
        if (hit[v]) {
            out.push_back(v);
        }
    }
    return out;
}

inline bool subset_independent(const Graph& g, std::uint32_t mask) {
    for (auto [u, v] : g.edges()) {
        if ((mask >> u & 1U) && (mask >> v & 1U)) {
            return false;
        }
    }
    return true;
}

inline int brute_independence_number(const Graph& g) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask) {
        if (subset_independent(g, mask)) {
            best = std::max(best, __builtin_popcount(mask));
        }
    }
    return best;
}

inline std::vector<VertexSet> brute_maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (!subset_independent(g, mask)) {
            continue;
        }
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (!(mask >> v & 1U) && subset_independent(g, mask | (1U << v))) {
                maximal = false;
            }
        }
        if (maximal) {
            VertexSet set;
            for (int v = 0; v < n; ++v) {
                if (mask >> v & 1U) {
                    set.push_back(v);
                }
            }
            out.push_back(set);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Tries all 3^n assignments.
inline bool brute_three_colorable(const Graph& g) {
    const int n = g.order();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    const auto edges = g.edges();
    while (true) {
        bool proper = true;
        for (auto [u, v] : edges) {
            if (c[u] == c[v]) {
                proper = false;
                break;
            }
        }
        if (proper) {
            return true;
        }
        int pos = 0;
        while (pos < n && ++c[pos] == 3) {
            c[pos++] = 0;
        }
        if (pos == n) {
            return false;
        }
    }
}

inline int count_components_without(const Graph& g, const std::vector<char>& removed) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int comps = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (removed[s] || seen[s]) {
            continue;
        }
        ++comps;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (!removed[y] && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return comps;
}

/// Cut vertices by deleting each vertex and recounting components.
inline VertexSet brute_cut_vertices(const Graph& g) {
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    const int base = count_components_without(g, removed);
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        removed[v] = 1;
        // Removing an isolated vertex drops a component; that is not a cut.
        const int after = count_components_without(g, removed) + (g.degree(v) == 0 ? 1 : 0);
        if (after > base) {
            out.push_back(v);
        }
        removed[v] = 0;
    }
    return out;
}

/// Connected and no single vertex deletion disconnects it (K2 counts).
inline bool brute_biconnected(const Graph& g) {
    const int n = g.order();
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    if (n < 2 || count_components_without(g, removed) != 1) {
        return false;
    }
    if (n == 2) {
        return true;
    }
    for (Vertex v = 0; v < n; ++v) {
        removed[v] = 1;
        if (count_components_without(g, removed) != 1) {
            return false;
        }
        removed[v] = 0;
    }
    return true;
}

}  // namespace fracol::testing
