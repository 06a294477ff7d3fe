#include "fracol/graph.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

namespace fracol {

namespace {

using Bits = boost::dynamic_bitset<>;

std::string edge_text(const Edge& e) {
    return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

void require_vertex(const Graph& g, Vertex v, const char* what) {
    if (!g.contains(v)) {
        throw Error(ErrorKind::invalid_input,
                    std::string(what) + ": vertex " + std::to_string(v) + " out of range");
    }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 0) {
        throw Error(ErrorKind::invalid_input, "negative vertex count");
    }
    adjacency_.resize(static_cast<std::size_t>(n));
    for (const auto& e : edges) {
        auto [u, v] = e;
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorKind::invalid_input, "edge " + edge_text(e) + " has an endpoint outside [0, " +
                                                      std::to_string(n) + ")");
        }
        if (u == v) {
            throw Error(ErrorKind::invalid_input, "self-loop " + edge_text(e));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& list : adjacency_) {
        best = std::max(best, static_cast<int>(list.size()));
    }
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

VertexSet distance_neighborhood(const Graph& g, Vertex u, int length) {
    require_vertex(g, u, "distance_neighborhood");
    if (length < 1 || length > 5) {
        throw Error(ErrorKind::invalid_input, "path length must be in 1..5");
    }
    std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
    std::vector<char> reached(static_cast<std::size_t>(g.order()), 0);
    on_path[u] = 1;
    std::function<void(Vertex, int)> walk = [&](Vertex at, int depth) {
        if (depth == length) {
            reached[at] = 1;
            return;
        }
        for (Vertex next : g.neighbors(at)) {
            if (!on_path[next]) {
                on_path[next] = 1;
                walk(next, depth + 1);
                on_path[next] = 0;
            }
        }
    };
    walk(u, 0);
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (reached[v] && v != u) {
            out.push_back(v);
        }
    }
    return out;
}

GirthResult girth(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    GirthResult result;
    if (best == std::numeric_limits<int>::max()) {
        return result;
    }
    result.length = best;

    // Canonical witness: starts at its smallest vertex, second vertex smaller
    // than the last. Ascending DFS finds the lexicographically first one.
    std::vector<Vertex> path;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(Vertex)> extend = [&](Vertex start) -> bool {
        Vertex at = path.back();
        if (static_cast<int>(path.size()) == best) {
            return g.adjacent(at, start) && path[1] < path.back();
        }
        for (Vertex next : g.neighbors(at)) {
            if (next > start && !used[next]) {
                used[next] = 1;
                path.push_back(next);
                if (extend(start)) {
                    return true;
                }
                path.pop_back();
                used[next] = 0;
            }
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        if (extend(s)) {
            result.cycle = path;
            return result;
        }
    }
    throw Error(ErrorKind::internal, "girth witness search failed");
}

bool is_triangle_free(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto& nu = g.neighbors(u);
        for (std::size_t i = 0; i < nu.size(); ++i) {
            for (std::size_t j = i + 1; j < nu.size(); ++j) {
                if (g.adjacent(nu[i], nu[j])) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) {
            continue;
        }
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (Vertex y : g.neighbors(x)) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

BlockDecomposition blocks(const Graph& g) {
    const int n = g.order();
    BlockDecomposition out;
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (Vertex w : g.neighbors(u)) {
            if (disc[w] < 0) {
                ++children;
                edge_stack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    if (parent >= 0 || children > 1) {
                        is_cut[u] = 1;
                    }
                    VertexSet block;
                    while (true) {
                        Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e.first);
                        block.push_back(e.second);
                        if (e == Edge{u, w}) {
                            break;
                        }
                    }
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    out.blocks.push_back(std::move(block));
                }
            } else if (w != parent && disc[w] < disc[u]) {
                edge_stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };

    for (Vertex s = 0; s < n; ++s) {
        if (disc[s] < 0) {
            dfs(s, -1);
            if (g.degree(s) == 0) {
                out.blocks.push_back({s});
            }
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (Vertex v = 0; v < n; ++v) {
        if (is_cut[v]) {
            out.cut_vertices.push_back(v);
        }
    }
    return out;
}

bool is_biconnected(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) {
        return false;
    }
    return blocks(g).blocks.size() == 1;
}

bool is_gallai_forest(const Graph& g, int k) {
    if (k < 2) {
        throw Error(ErrorKind::invalid_input, "is_gallai_forest requires k >= 2");
    }
    if (g.max_degree() > k - 1) {
        return false;
    }
    for (const auto& block : blocks(g).blocks) {
        const Graph b = induced_subgraph(g, block);
        const auto s = static_cast<std::size_t>(b.order());
        const bool complete = b.size() == s * (s - 1) / 2;
        bool odd_cycle = s % 2 == 1 && b.size() == s;
        for (Vertex v = 0; odd_cycle && v < b.order(); ++v) {
            odd_cycle = b.degree(v) == 2;
        }
        if (!complete && !odd_cycle) {
            return false;
        }
    }
    return true;
}

Graph contract_pair(const Graph& g, Vertex u, Vertex v) {
    require_vertex(g, u, "contract_pair");
    require_vertex(g, v, "contract_pair");
    if (u == v) {
        throw Error(ErrorKind::invalid_input, "contract_pair needs two distinct vertices");
    }
    if (g.adjacent(u, v)) {
        throw Error(ErrorKind::invalid_input, "contracting adjacent vertices " + std::to_string(u) + " and " +
                                                  std::to_string(v) + " would create a self-loop");
    }
    const Vertex keep = std::min(u, v);
    const Vertex drop = std::max(u, v);
    auto relabel = [&](Vertex x) {
        if (x == drop) {
            return keep;
        }
        return x > drop ? x - 1 : x;
    };
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        edges.emplace_back(relabel(a), relabel(b));
    }
    return Graph(g.order() - 1, edges);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    require_vertex(g, u, "add_edge");
    require_vertex(g, v, "add_edge");
    auto edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        require_vertex(g, vertices[i], "induced_subgraph");
        local[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            if (local[w] > static_cast<int>(i)) {
                edges.emplace_back(static_cast<int>(i), local[w]);
            }
        }
    }
    return Graph(static_cast<int>(vertices.size()), edges);
}

namespace {

std::vector<Bits> closed_neighborhood_masks(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<Bits> masks(n, Bits(n));
    for (Vertex v = 0; v < g.order(); ++v) {
        masks[v].set(v);
        for (Vertex w : g.neighbors(v)) {
            masks[v].set(w);
        }
    }
    return masks;
}

VertexSet members(const Bits& bits) {
    VertexSet out;
    for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
        out.push_back(static_cast<Vertex>(i));
    }
    return out;
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::size_t cap) {
    const auto n = static_cast<std::size_t>(g.order());
    const auto closed = closed_neighborhood_masks(g);
    std::vector<VertexSet> out;
    Bits chosen(n);

    // Bron-Kerbosch with pivoting, run on the complement implicitly:
    // candidates compatible with v are those outside N[v].
    std::function<void(Bits, Bits)> expand = [&](Bits candidates, Bits excluded) {
        if (candidates.none()) {
            if (excluded.none()) {
                if (out.size() == cap) {
                    throw Error(ErrorKind::resource_cap,
                                "instance too large: more than " + std::to_string(cap) + " maximal independent sets");
                }
                out.push_back(members(chosen));
            }
            return;
        }
        const Bits pool = candidates | excluded;
        std::size_t pivot = pool.find_first();
        std::size_t fewest = n + 1;
        for (auto u = pool.find_first(); u != Bits::npos; u = pool.find_next(u)) {
            const auto branching = (candidates & closed[u]).count();
            if (branching < fewest) {
                fewest = branching;
                pivot = u;
            }
        }
        const Bits branch = candidates & closed[pivot];
        for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
            chosen.set(v);
            expand(candidates - closed[v], excluded - closed[v]);
            chosen.reset(v);
            candidates.reset(v);
            excluded.set(v);
        }
    };
    Bits all(n);
    all.set();
    expand(all, Bits(n));
    std::sort(out.begin(), out.end());
    return out;
}

IndependenceResult independence_number(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    const auto closed = closed_neighborhood_masks(g);
    IndependenceResult best;
    Bits chosen(n);

    std::function<void(const Bits&, int)> search = [&](const Bits& live, int size) {
        const auto remaining = static_cast<int>(live.count());
        if (size + remaining <= best.size) {
            return;
        }
        if (remaining == 0) {
            best.size = size;
            best.witness = members(chosen);
            return;
        }
        std::size_t low_v = Bits::npos, high_v = Bits::npos;
        std::size_t low_d = n + 1, high_d = 0;
        for (auto v = live.find_first(); v != Bits::npos; v = live.find_next(v)) {
            const auto d = (live & closed[v]).count() - 1;
            if (d < low_d) {
                low_d = d;
                low_v = v;
            }
            if (d > high_d || high_v == Bits::npos) {
                high_d = d;
                high_v = v;
            }
        }
        // A vertex of degree <= 1 is in some maximum independent set.
        if (low_d <= 1) {
            chosen.set(low_v);
            search(live - closed[low_v], size + 1);
            chosen.reset(low_v);
            return;
        }
        chosen.set(high_v);
        search(live - closed[high_v], size + 1);
        chosen.reset(high_v);
        Bits without = live;
        without.reset(high_v);
        search(without, size);
    };
    Bits all(n);
    all.set();
    search(all, 0);
    return best;
}

int clique_number(const Graph& g) { return independence_number(complement(g)).size; }

bool is_independent(const Graph& g, const VertexSet& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (g.adjacent(set[i], set[j])) {
                return false;
            }
        }
    }
    return true;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0, m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0 || n > std::numeric_limits<int>::max()) {
        throw Error(ErrorKind::invalid_input, "edge list must start with 'n m'");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) {
            throw Error(ErrorKind::invalid_input, "edge list declares " + std::to_string(m) + " edges but only " +
                                                      std::to_string(i) + " were read");
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw Error(ErrorKind::invalid_input, "edge " + std::to_string(i) + " has an endpoint outside [0, " +
                                                      std::to_string(n) + ")");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string extra;
    if (in >> extra) {
        throw Error(ErrorKind::invalid_input, "trailing data after " + std::to_string(m) + " edges");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : to_edge_list(g)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace fracol
