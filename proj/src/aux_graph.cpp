#include "fracol/aux_graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fracol {

AuxGraph build_aux(const Graph& g, const AdmissibleTriple& t) {
    if (auto check = is_admissible(g, t); !check) {
        throw Error(ErrorKind::invalid_input, "build_aux: triple is not admissible: " + check.reason);
    }
    const int n = g.order();
    // role: -1 other, 0..2 in X_j, 3..5 in Y_j
    std::vector<int> role(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < 3; ++j) {
        for (Vertex x : t.parts[j]) {
            role[x] = j;
        }
    }
    std::array<VertexSet, 3> hub_sets;
    for (int j = 0; j < 3; ++j) {
        for (Vertex x : t.parts[j]) {
            for (Vertex y : g.neighbors(x)) {
                if (role[y] >= 0 && role[y] < 3) {
                    throw Error(ErrorKind::internal, "build_aux: X vertices are adjacent");
                }
                if (role[y] >= 3 && role[y] != 3 + j) {
                    throw Error(ErrorKind::internal, "build_aux: neighborhoods of two parts meet");
                }
                role[y] = 3 + j;
                hub_sets[j].push_back(y);
            }
        }
        std::sort(hub_sets[j].begin(), hub_sets[j].end());
        hub_sets[j].erase(std::unique(hub_sets[j].begin(), hub_sets[j].end()), hub_sets[j].end());
        if (!is_independent(g, hub_sets[j])) {
            throw Error(ErrorKind::internal, "build_aux: neighborhood of X" + std::to_string(j + 1) +
                                                 " is not independent");
        }
    }

    AuxGraph aux;
    aux.quotient_of.assign(static_cast<std::size_t>(n), -1);
    Vertex next = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (role[v] == -1) {
            aux.quotient_of[v] = next++;
            aux.back_map.push_back({v});
        }
    }
    for (int j = 0; j < 3; ++j) {
        aux.hubs[j] = next + j;
        for (Vertex y : hub_sets[j]) {
            aux.quotient_of[y] = next + j;
        }
        aux.back_map.push_back(hub_sets[j]);
    }
    std::vector<Edge> edges{{aux.hubs[0], aux.hubs[1]}, {aux.hubs[1], aux.hubs[2]}, {aux.hubs[0], aux.hubs[2]}};
    for (auto [u, v] : g.edges()) {
        const Vertex qu = aux.quotient_of[u];
        const Vertex qv = aux.quotient_of[v];
        if (qu >= 0 && qv >= 0 && qu != qv) {
            edges.emplace_back(qu, qv);
        }
    }
    aux.quotient = Graph(next + 3, edges);
    return aux;
}

ColoringSearch find_coloring(const Graph& g, int k, std::span<const std::pair<Vertex, int>> fixed,
                             std::uint64_t node_budget) {
    const int n = g.order();
    ColoringSearch result;
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    // banned[v][c] = number of colored neighbors of v using c
    std::vector<std::vector<int>> banned(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), 0));
    std::vector<int> usage(static_cast<std::size_t>(k), 0);

    auto assign = [&](Vertex v, int c) {
        color[v] = c;
        ++usage[c];
        for (Vertex w : g.neighbors(v)) {
            ++banned[w][c];
        }
    };
    auto unassign = [&](Vertex v) {
        const int c = color[v];
        color[v] = -1;
        --usage[c];
        for (Vertex w : g.neighbors(v)) {
            --banned[w][c];
        }
    };

    for (auto [v, c] : fixed) {
        if (!g.contains(v) || c < 0 || c >= k) {
            throw Error(ErrorKind::invalid_input, "find_coloring: bad pinned color");
        }
        if (color[v] >= 0 || banned[v][c] > 0) {
            result.status = ColorStatus::not_colorable;
            return result;
        }
        assign(v, c);
    }

    bool out_of_budget = false;
    std::function<bool(int)> search = [&](int remaining) -> bool {
        if (remaining == 0) {
            return true;
        }
        if (++result.nodes > node_budget) {
            out_of_budget = true;
            return false;
        }
        Vertex pick = -1;
        int best_sat = -1, best_deg = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] >= 0) {
                continue;
            }
            int sat = 0;
            for (int c = 0; c < k; ++c) {
                sat += banned[v][c] > 0;
            }
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        if (best_sat == k) {
            return false;
        }
        bool tried_fresh = false;
        for (int c = 0; c < k; ++c) {
            if (banned[pick][c] > 0) {
                continue;
            }
            if (usage[c] == 0) {
                if (tried_fresh) {
                    continue;
                }
                tried_fresh = true;
            }
            assign(pick, c);
            if (search(remaining - 1)) {
                return true;
            }
            unassign(pick);
            if (out_of_budget) {
                return false;
            }
        }
        return false;
    };

    const int remaining = static_cast<int>(std::count(color.begin(), color.end(), -1));
    if (search(remaining)) {
        result.status = ColorStatus::colorable;
        result.colors = color;
    } else {
        result.status = out_of_budget ? ColorStatus::undecided : ColorStatus::not_colorable;
    }
    return result;
}

int chromatic_number(const Graph& g) {
    for (int k = g.order() == 0 ? 0 : 1;; ++k) {
        const auto r = find_coloring(g, k);
        if (r.status == ColorStatus::colorable || (k == 0 && g.order() == 0)) {
            return k;
        }
        if (r.status == ColorStatus::undecided) {
            throw Error(ErrorKind::resource_cap, "chromatic_number: search budget exhausted");
        }
    }
}

ThreeColorResult three_color(const Graph& g, std::optional<std::array<Vertex, 3>> hubs,
                             std::uint64_t node_budget) {
    std::vector<std::pair<Vertex, int>> fixed;
    if (hubs) {
        for (int j = 0; j < 3; ++j) {
            for (int l = j + 1; l < 3; ++l) {
                if (!g.adjacent((*hubs)[j], (*hubs)[l])) {
                    throw Error(ErrorKind::invalid_input, "three_color: hubs do not form a triangle");
                }
            }
            fixed.emplace_back((*hubs)[j], j);
        }
    }
    ThreeColorResult out;
    auto search = find_coloring(g, 3, fixed, node_budget);
    out.status = search.status;
    if (search.status == ColorStatus::colorable) {
        out.colors = std::move(search.colors);
        return out;
    }
    if (search.status == ColorStatus::undecided) {
        return out;
    }
    // Shrink to an edge-minimal subgraph that is still not 3-colorable.
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size();) {
        std::vector<Edge> trial = edges;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        const auto r = find_coloring(Graph(g.order(), trial), 3, {}, node_budget);
        if (r.status == ColorStatus::not_colorable) {
            edges = std::move(trial);
        } else {
            ++i;
        }
    }
    out.critical_hint = std::move(edges);
    return out;
}

Check check_instance(const HubSplitInstance& inst) {
    if (inst.k < 1) {
        return Check::fail("k must be at least 1");
    }
    if (static_cast<int>(inst.attachment.size()) != 2 * inst.k + 1) {
        return Check::fail("attachment map must cover all 2k+1 cycle positions");
    }
    std::array<int, 4> count{};
    for (int h : inst.attachment) {
        if (h < 1 || h > 3) {
            return Check::fail("attachment values must be hubs 1, 2 or 3");
        }
        ++count[h];
    }
    const int unused = (count[1] == 0) + (count[2] == 0) + (count[3] == 0);
    if (unused > 1) {
        return Check::fail("more than one hub has no cycle neighbor");
    }
    return Check::pass();
}

Graph hub_split_graph(const HubSplitInstance& inst) {
    if (auto check = check_instance(inst); !check) {
        throw Error(ErrorKind::invalid_input, "hub-split instance: " + check.reason);
    }
    const int len = 2 * inst.k + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < len; ++i) {
        edges.emplace_back(i, (i + 1) % len);
        edges.emplace_back(i, len - 1 + inst.attachment[i]);
    }
    edges.emplace_back(len, len + 1);
    edges.emplace_back(len + 1, len + 2);
    edges.emplace_back(len, len + 2);
    return Graph(len + 3, edges);
}

const char* to_string(IntervalType type) {
    switch (type) {
    case IntervalType::I: return "I";
    case IntervalType::II: return "II";
    case IntervalType::III: return "III";
    case IntervalType::IV: return "IV";
    case IntervalType::empty: return "empty";
    }
    return "?";
}

std::vector<Interval> classify_intervals(const HubSplitInstance& inst, int start_spoke) {
    if (auto check = check_instance(inst); !check) {
        throw Error(ErrorKind::invalid_input, "hub-split instance: " + check.reason);
    }
    const int len = static_cast<int>(inst.attachment.size());
    if (start_spoke < 0 || start_spoke >= len || inst.attachment[start_spoke] != 1) {
        throw Error(ErrorKind::invalid_input, "classify_intervals: start must be a hub-1 position");
    }
    std::vector<Interval> out;
    int spoke = start_spoke;
    do {
        Interval iv;
        iv.left_spoke = spoke;
        int pos = (spoke + 1) % len;
        while (inst.attachment[pos] != 1) {
            iv.positions.push_back(pos);
            pos = (pos + 1) % len;
        }
        iv.right_spoke = pos;
        if (!iv.positions.empty()) {
            const int first = inst.attachment[iv.positions.front()];
            const int last = inst.attachment[iv.positions.back()];
            iv.type = first == 2 ? (last == 2 ? IntervalType::I : IntervalType::II)
                                 : (last == 2 ? IntervalType::III : IntervalType::IV);
            iv.degenerate = std::all_of(iv.positions.begin(), iv.positions.end(),
                                        [&](int p) { return inst.attachment[p] == first; });
        }
        out.push_back(std::move(iv));
        spoke = pos;
    } while (spoke != start_spoke);
    return out;
}

namespace {

// Rows: interval type I..IV. Columns: (c(u), c(v)) = (2,2), (2,3), (3,2), (3,3).
constexpr bool extension_table[4][4] = {
    {true, true, true, false},
    {true, true, false, true},
    {true, false, true, true},
    {false, true, true, true},
};

bool keeps_spoke_colors_equal(IntervalType type) { return type == IntervalType::II || type == IntervalType::III; }

}  // namespace

bool interval_extends(IntervalType type, int left_color, int right_color) {
    if (type == IntervalType::empty) {
        return left_color != right_color;
    }
    const int row = static_cast<int>(type);
    const int col = 2 * (left_color - 2) + (right_color - 2);
    return extension_table[row][col];
}

std::vector<int> hub_split_three_color(const HubSplitInstance& inst) {
    const Graph h = hub_split_graph(inst);
    const int len = 2 * inst.k + 1;

    // Relabel hubs so that roles 1 and 2 both have spokes.
    std::array<int, 4> count{};
    for (int a : inst.attachment) {
        ++count[a];
    }
    std::array<int, 4> hub_of_role{};
    std::array<int, 4> role_of_hub{};
    int next_role = 1;
    for (int hub = 1; hub <= 3; ++hub) {
        if (count[hub] > 0) {
            hub_of_role[next_role++] = hub;
        }
    }
    for (int hub = 1; hub <= 3; ++hub) {
        if (count[hub] == 0) {
            hub_of_role[next_role++] = hub;
        }
    }
    for (int r = 1; r <= 3; ++r) {
        role_of_hub[hub_of_role[r]] = r;
    }
    HubSplitInstance roles{inst.k, {}};
    for (int a : inst.attachment) {
        roles.attachment.push_back(role_of_hub[a]);
    }

    // Start right after a nonempty interval so the closing interval is never empty.
    int start = -1;
    for (int p = 0; p < len && start < 0; ++p) {
        if (roles.attachment[p] == 1 && roles.attachment[(p + len - 1) % len] != 1) {
            start = p;
        }
    }
    if (start < 0) {
        throw Error(ErrorKind::internal, "hub_split_three_color: no hub-1 spoke follows a nonempty interval");
    }
    const auto intervals = classify_intervals(roles, start);

    std::vector<int> color(static_cast<std::size_t>(len + 3), 0);
    color[len] = 1;
    color[len + 1] = 2;
    color[len + 2] = 3;
    color[start] = 2;
    for (std::size_t t = 0; t + 1 < intervals.size(); ++t) {
        const auto& iv = intervals[t];
        const int left = color[iv.left_spoke];
        color[iv.right_spoke] = keeps_spoke_colors_equal(iv.type) ? left : 5 - left;
    }
    const auto& closing = intervals.back();
    if (!interval_extends(closing.type, color[closing.left_spoke], color[closing.right_spoke])) {
        for (int p = 0; p < len; ++p) {
            if (roles.attachment[p] == 1) {
                color[p] = 5 - color[p];
            }
        }
    }

    for (const auto& iv : intervals) {
        const int cu = color[iv.left_spoke];
        const int cv = color[iv.right_spoke];
        if (!interval_extends(iv.type, cu, cv)) {
            std::ostringstream why;
            why << "hub_split_three_color: interval after spoke " << iv.left_spoke << " of type "
                << to_string(iv.type) << " gets spoke colors (" << cu << ", " << cv << ")";
            throw Error(ErrorKind::internal, why.str());
        }
        if (iv.positions.empty()) {
            continue;
        }
        // A free end sees the same color on its spoke and on its hub.
        const bool left_free = cu == roles.attachment[iv.positions.front()];
        const bool right_free = cv == roles.attachment[iv.positions.back()];
        if (!left_free && !right_free) {
            throw Error(ErrorKind::internal, "hub_split_three_color: extendable interval without a free end");
        }
        std::vector<int> sequence = iv.positions;
        if (left_free) {
            std::reverse(sequence.begin(), sequence.end());
        }
        for (int p : sequence) {
            std::array<bool, 4> used{};
            used[roles.attachment[p]] = true;
            for (Vertex w : {(p + 1) % len, (p + len - 1) % len}) {
                used[color[w]] = true;
            }
            int pick = 1;
            while (pick <= 3 && used[pick]) {
                ++pick;
            }
            if (pick > 3) {
                throw Error(ErrorKind::internal, "hub_split_three_color: greedy fill got stuck at position " +
                                                     std::to_string(p));
            }
            color[p] = pick;
        }
    }

    // Undo the hub relabeling: color r belonged to the hub playing role r.
    // The hub vertices themselves were indexed by role, so reset them.
    for (int p = 0; p < len; ++p) {
        color[p] = hub_of_role[color[p]];
    }
    for (int hub = 1; hub <= 3; ++hub) {
        color[len - 1 + hub] = hub;
    }
    for (auto [u, v] : h.edges()) {
        if (color[u] == color[v]) {
            throw Error(ErrorKind::internal, "hub_split_three_color: improper edge (" + std::to_string(u) + ", " +
                                                 std::to_string(v) + ")");
        }
    }
    return color;
}

}  // namespace fracol
