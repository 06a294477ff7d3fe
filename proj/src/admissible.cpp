#include "fracol/admissible.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace fracol {

VertexSet AdmissibleTriple::members() const {
    VertexSet out;
    for (const auto& part : parts) {
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

DistanceTable::DistanceTable(const Graph& g) : sets_(static_cast<std::size_t>(g.order())) {
    for (Vertex u = 0; u < g.order(); ++u) {
        for (int i = 1; i <= 5; ++i) {
            sets_[u][i - 1] = distance_neighborhood(g, u, i);
        }
    }
}

bool DistanceTable::reaches(Vertex u, Vertex v, int length) const {
    const auto& set = at(u, length);
    return std::binary_search(set.begin(), set.end(), v);
}

Check is_admissible(const Graph& g, const AdmissibleTriple& t) { return is_admissible(g, DistanceTable(g), t); }

Check is_admissible(const Graph& g, const DistanceTable& table, const AdmissibleTriple& t) {
    std::vector<int> part_of(static_cast<std::size_t>(g.order()), -1);
    for (int p = 0; p < 3; ++p) {
        for (Vertex v : t.parts[p]) {
            if (!g.contains(v)) {
                return Check::fail("vertex " + std::to_string(v) + " is not in the graph");
            }
            if (part_of[v] >= 0) {
                return Check::fail("vertex " + std::to_string(v) + " appears in two parts");
            }
            part_of[v] = p;
        }
    }
    static constexpr int same_part[] = {1, 3, 5};
    static constexpr int cross_part[] = {1, 2, 4};
    for (int p = 0; p < 3; ++p) {
        for (Vertex u : t.parts[p]) {
            for (int q = 0; q < 3; ++q) {
                for (Vertex v : t.parts[q]) {
                    if (v == u) {
                        continue;
                    }
                    for (int len : (p == q ? same_part : cross_part)) {
                        if (table.reaches(u, v, len)) {
                            std::ostringstream why;
                            why << "vertices " << u << " (X" << p + 1 << ") and " << v << " (X" << q + 1
                                << ") are joined by a path of length " << len;
                            return Check::fail(why.str());
                        }
                    }
                }
            }
        }
    }
    return Check::pass();
}

std::vector<Vertex> elimination_order(const Graph& g, Vertex second_last, Vertex last) {
    if (!g.contains(second_last) || !g.contains(last) || !g.adjacent(second_last, last)) {
        throw Error(ErrorKind::invalid_input, "elimination_order: reserved vertices must be adjacent");
    }
    if (!is_connected(g)) {
        throw Error(ErrorKind::invalid_input, "elimination_order: graph must be connected");
    }
    const int n = g.order();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int remaining = n; remaining > 2; --remaining) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[last] = 0;
        std::queue<Vertex> queue;
        queue.push(last);
        Vertex pick = -1;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            if (x != last && x != second_last && (pick < 0 || dist[x] > dist[pick])) {
                pick = x;
            }
            for (Vertex y : g.neighbors(x)) {
                if (alive[y] && dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push(y);
                }
            }
        }
        alive[pick] = 0;
        order.push_back(pick);
    }
    order.push_back(second_last);
    order.push_back(last);
    return order;
}

int GreedyPartition::max_forbidden_before_endgame() const {
    if (forbidden.size() <= 2) {
        return 0;
    }
    return *std::max_element(forbidden.begin(), forbidden.end() - 2);
}

std::array<int, 2> GreedyPartition::endgame_forbidden() const {
    if (forbidden.size() < 2) {
        return {0, 0};
    }
    return {forbidden[forbidden.size() - 2], forbidden.back()};
}

int endgame_bound(int cycle_length) {
    switch (cycle_length) {
    case 4: return 3 * 3 + 2 * (5 + 23) + (12 + 48) - 2;           // 123
    case 5: return 3 * 3 + 2 * (6 + 24) + (12 + 47) - 2 * 2;       // 124
    case 6: return 3 * 3 + 2 * (6 + 24) + (11 + 48) - 2 - 2 * 2;   // 122
    default: throw Error(ErrorKind::invalid_input, "endgame bound defined for cycle lengths 4..6 only");
    }
}

GreedyPartition greedy_partition(const Graph& g, std::uint64_t seed) {
    if (g.max_degree() > 3) {
        throw Error(ErrorKind::invalid_input, "greedy_partition: maximum degree exceeds 3");
    }
    if (!is_triangle_free(g)) {
        throw Error(ErrorKind::invalid_input, "greedy_partition: graph has a triangle");
    }
    if (!is_biconnected(g)) {
        throw Error(ErrorKind::invalid_input, "greedy_partition: graph is not 2-connected");
    }
    const auto gr = girth(g);
    if (!gr.length || *gr.length > 6) {
        throw Error(ErrorKind::out_of_scope, "greedy_partition: girth is at least 7");
    }

    GreedyPartition out;
    out.witness_cycle = gr.cycle;
    const auto len = out.witness_cycle.size();
    const auto edge = static_cast<std::size_t>(seed % len);
    const Vertex second_last = out.witness_cycle[edge];
    const Vertex last = out.witness_cycle[(edge + 1) % len];
    out.order = elimination_order(g, second_last, last);

    std::vector<int> preference(partition_palette);
    std::iota(preference.begin(), preference.end(), 1);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(preference.begin(), preference.end(), rng);
    }

    const DistanceTable table(g);
    out.coloring.assign(static_cast<std::size_t>(g.order()), 0);
    for (Vertex w : out.order) {
        std::bitset<partition_palette + 1> banned;
        auto ban = [&](int color) { banned.set(static_cast<std::size_t>(color)); };
        for (Vertex u : table.at(w, 1)) {
            if (int c = out.coloring[u]) {
                const int first = 3 * ((c - 1) / 3) + 1;
                ban(first);
                ban(first + 1);
                ban(first + 2);
            }
        }
        for (int len_odd : {3, 5}) {
            for (Vertex u : table.at(w, len_odd)) {
                if (int c = out.coloring[u]) {
                    ban(c);
                }
            }
        }
        for (int len_even : {2, 4}) {
            for (Vertex u : table.at(w, len_even)) {
                if (int c = out.coloring[u]) {
                    const int first = 3 * ((c - 1) / 3) + 1;
                    for (int s = first; s < first + 3; ++s) {
                        if (s != c) {
                            ban(s);
                        }
                    }
                }
            }
        }
        const int count = static_cast<int>(banned.count());
        out.forbidden.push_back(count);
        auto it = std::find_if(preference.begin(), preference.end(),
                               [&](int c) { return !banned.test(static_cast<std::size_t>(c)); });
        if (it == preference.end()) {
            std::ostringstream dump;
            dump << "greedy_partition: no admissible color left for vertex " << w << " (" << count
                 << " forbidden); order prefix:";
            for (Vertex x : out.order) {
                if (x == w) {
                    break;
                }
                dump << ' ' << x << '=' << out.coloring[x];
            }
            throw Error(ErrorKind::internal, dump.str());
        }
        out.coloring[w] = *it;
    }

    for (int block = 1; block <= partition_blocks; ++block) {
        AdmissibleTriple t;
        for (Vertex v = 0; v < g.order(); ++v) {
            const int c = out.coloring[v];
            if ((c - 1) / 3 + 1 == block) {
                t.parts[(c - 1) % 3].push_back(v);
            }
        }
        if (!t.empty()) {
            out.triples.push_back(std::move(t));
            out.blocks.push_back(block);
        }
    }
    return out;
}

nlohmann::json to_json(const AdmissibleTriple& t) {
    return {{"X1", t.parts[0]}, {"X2", t.parts[1]}, {"X3", t.parts[2]}};
}

nlohmann::json to_json(const std::vector<AdmissibleTriple>& triples) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : triples) {
        out.push_back(to_json(t));
    }
    return out;
}

std::vector<AdmissibleTriple> partition_from_json(const nlohmann::json& j) {
    std::vector<AdmissibleTriple> out;
    try {
        for (const auto& entry : j) {
            AdmissibleTriple t;
            t.parts[0] = entry.at("X1").get<VertexSet>();
            t.parts[1] = entry.at("X2").get<VertexSet>();
            t.parts[2] = entry.at("X3").get<VertexSet>();
            for (auto& part : t.parts) {
                std::sort(part.begin(), part.end());
            }
            out.push_back(std::move(t));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::invalid_input, std::string("malformed partition: ") + e.what());
    }
    return out;
}

}  // namespace fracol
