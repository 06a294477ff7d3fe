#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracol/aux_graph.hpp"
#include "fracol/catalog.hpp"
#include "test_support.hpp"

#include <map>
#include <tuple>

using namespace fracol;

namespace {

// Hubs 0, 1, 2 in a triangle; 5-cycle j sits on vertices 3+5j..7+5j and every
// one of its vertices is joined to hub j, so each hub with its cycle is a
// 5-wheel.
Graph wheel_pattern() {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    for (int j = 0; j < 3; ++j) {
        const int base = 3 + 5 * j;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(base + i, base + (i + 1) % 5);
            edges.emplace_back(j, base + i);
        }
    }
    return Graph(18, edges);
}

bool proper(const Graph& g, const std::vector<int>& colors) {
    for (auto [u, v] : g.edges()) {
        if (colors[u] == colors[v]) {
            return false;
        }
    }
    return true;
}

std::vector<HubSplitInstance> all_instances(int k) {
    std::vector<HubSplitInstance> out;
    const int len = 2 * k + 1;
    std::vector<int> att(static_cast<std::size_t>(len), 1);
    while (true) {
        HubSplitInstance inst{k, att};
        if (check_instance(inst)) {
            out.push_back(inst);
        }
        int pos = 0;
        while (pos < len && ++att[pos] == 4) {
            att[pos++] = 1;
        }
        if (pos == len) {
            break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("auxiliary graph of C6 with antipodal singletons") {
    const auto aux = build_aux(cycle_graph(6), {{{{0}, {3}, {}}}});
    CHECK(aux.quotient.order() == 3);
    CHECK(aux.quotient.size() == 3);
    CHECK(aux.hubs == std::array<Vertex, 3>{0, 1, 2});
    CHECK(aux.back_map[0] == VertexSet{1, 5});
    CHECK(aux.back_map[1] == VertexSet{2, 4});
    CHECK(aux.back_map[2].empty());
    CHECK(aux.quotient_of[0] == -1);
    CHECK(aux.quotient_of[3] == -1);
    CHECK(aux.quotient_of[5] == 0);
    CHECK(aux.quotient_of[4] == 1);
}

TEST_CASE("auxiliary graph of C4 and of the empty triple") {
    const auto c4 = build_aux(cycle_graph(4), {{{{0, 2}, {}, {}}}});
    CHECK(c4.quotient.order() == 3);
    CHECK(c4.back_map[c4.hubs[0]] == VertexSet{1, 3});

    const auto c5 = build_aux(cycle_graph(5), AdmissibleTriple{});
    CHECK(c5.quotient.order() == 8);
    CHECK(c5.quotient.size() == 8);
    CHECK(c5.hubs == std::array<Vertex, 3>{5, 6, 7});
    for (Vertex v = 0; v < 5; ++v) {
        CHECK(c5.quotient_of[v] == v);
    }

    CHECK_THROWS_AS(build_aux(cycle_graph(4), {{{{0}, {2}, {}}}}), Error);
}

TEST_CASE("auxiliary graphs of generated partitions are faithful quotients") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto g = random_subcubic_triangle_free({.n = 24, .seed = seed, .girth_max = 6, .biconnected = true});
        const auto p = greedy_partition(g, seed);
        for (const auto& t : p.triples) {
            const auto aux = build_aux(g, t);
            const auto& q = aux.quotient;
            for (int a = 0; a < 3; ++a) {
                for (int b = a + 1; b < 3; ++b) {
                    CHECK(q.adjacent(aux.hubs[a], aux.hubs[b]));
                }
            }
            const auto members = t.members();
            for (Vertex v = 0; v < g.order(); ++v) {
                const bool in_x = std::binary_search(members.begin(), members.end(), v);
                CHECK((aux.quotient_of[v] == -1) == in_x);
            }
            for (auto [u, v] : g.edges()) {
                const Vertex qu = aux.quotient_of[u];
                const Vertex qv = aux.quotient_of[v];
                if (qu >= 0 && qv >= 0) {
                    CHECK(qu != qv);
                    CHECK(q.adjacent(qu, qv));
                }
            }
            for (Vertex x = 0; x < q.order(); ++x) {
                if (std::find(aux.hubs.begin(), aux.hubs.end(), x) == aux.hubs.end()) {
                    CHECK(aux.back_map[x].size() == 1);
                    CHECK(q.degree(x) <= g.degree(aux.back_map[x][0]));
                }
            }
        }
    }
}

TEST_CASE("exact coloring searches") {
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(generalized_petersen(5, 2)) == 3);
    CHECK(chromatic_number(build_graph(0, {})) == 0);

    const std::vector<std::pair<Vertex, int>> pins{{0, 1}, {3, 0}};
    const auto pinned = find_coloring(cycle_graph(6), 2, pins);
    REQUIRE(pinned.status == ColorStatus::colorable);
    CHECK(pinned.colors[0] == 1);
    CHECK(pinned.colors[3] == 0);
    CHECK(proper(cycle_graph(6), pinned.colors));

    const std::vector<std::pair<Vertex, int>> clash{{0, 0}, {1, 0}};
    CHECK(find_coloring(cycle_graph(6), 3, clash).status == ColorStatus::not_colorable);

    CHECK(find_coloring(wheel_pattern(), 3, {}, 5).status == ColorStatus::undecided);
}

TEST_CASE("three_color agrees with exhaustive search") {
    std::mt19937_64 rng(53);
    int colorable = 0;
    int not_colorable = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + trial % 9;
        const auto g = testing::random_graph(n, 0.45, rng);
        const auto r = three_color(g);
        const bool expected = testing::brute_three_colorable(g);
        CHECK((r.status == ColorStatus::colorable) == expected);
        if (expected) {
            ++colorable;
            CHECK(proper(g, r.colors));
        } else {
            ++not_colorable;
            REQUIRE(r.status == ColorStatus::not_colorable);
            CHECK_FALSE(testing::brute_three_colorable(Graph(n, r.critical_hint)));
        }
    }
    CHECK(colorable > 0);
    CHECK(not_colorable > 0);
}

TEST_CASE("three_color with pinned hubs") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const auto base = testing::random_graph(9, 0.3, rng);
        auto edges = base.edges();
        edges.emplace_back(9, 10);
        edges.emplace_back(10, 11);
        edges.emplace_back(9, 11);
        for (Vertex v = 0; v < 9; ++v) {
            if (rng() % 4 == 0) {
                edges.emplace_back(v, 9 + static_cast<int>(rng() % 3));
            }
        }
        const Graph g(12, edges);
        const auto r = three_color(g, std::array<Vertex, 3>{9, 10, 11});
        CHECK((r.status == ColorStatus::colorable) == testing::brute_three_colorable(g));
        if (r.status == ColorStatus::colorable) {
            CHECK(r.colors[9] == 0);
            CHECK(r.colors[10] == 1);
            CHECK(r.colors[11] == 2);
            CHECK(proper(g, r.colors));
        }
    }
    CHECK_THROWS_AS(three_color(cycle_graph(5), std::array<Vertex, 3>{0, 1, 2}), Error);
}

TEST_CASE("wheel pattern is 4-chromatic with an edge-minimal witness") {
    const auto g = wheel_pattern();
    const auto r = three_color(g, std::array<Vertex, 3>{0, 1, 2});
    REQUIRE(r.status == ColorStatus::not_colorable);
    CHECK(chromatic_number(g) == 4);
    REQUIRE_FALSE(r.critical_hint.empty());
    const Graph hint(18, r.critical_hint);
    CHECK(find_coloring(hint, 3).status == ColorStatus::not_colorable);
    for (std::size_t i = 0; i < r.critical_hint.size(); ++i) {
        auto fewer = r.critical_hint;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK(find_coloring(Graph(18, fewer), 3).status == ColorStatus::colorable);
    }
}

TEST_CASE("hub-split instances and interval types") {
    CHECK(check_instance({2, {1, 2, 3, 1, 2}}));
    CHECK_FALSE(check_instance({2, {1, 1, 1, 1, 1}}));
    CHECK_FALSE(check_instance({2, {1, 2, 3, 1}}));
    CHECK_FALSE(check_instance({2, {1, 2, 4, 1, 2}}));
    CHECK(check_instance({2, {1, 1, 2, 1, 2}}));

    const auto g = hub_split_graph({2, {1, 2, 3, 1, 2}});
    CHECK(g.order() == 8);
    CHECK(g.adjacent(0, 5));
    CHECK(g.adjacent(1, 6));
    CHECK(g.adjacent(2, 7));

    const auto ivs = classify_intervals({2, {1, 2, 3, 1, 2}}, 0);
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0].left_spoke == 0);
    CHECK(ivs[0].right_spoke == 3);
    CHECK(ivs[0].positions == std::vector<int>{1, 2});
    CHECK(ivs[0].type == IntervalType::II);
    CHECK_FALSE(ivs[0].degenerate);
    CHECK(ivs[1].positions == std::vector<int>{4});
    CHECK(ivs[1].type == IntervalType::I);
    CHECK(ivs[1].degenerate);

    const auto single = classify_intervals({2, {1, 3, 2, 2, 3}}, 0);
    REQUIRE(single.size() == 1);
    CHECK(single[0].left_spoke == single[0].right_spoke);
    CHECK(single[0].type == IntervalType::IV);

    const auto adjacent = classify_intervals({2, {1, 1, 3, 3, 2}}, 0);
    REQUIRE(adjacent.size() == 2);
    CHECK(adjacent[0].type == IntervalType::empty);
    CHECK(adjacent[1].type == IntervalType::III);

    CHECK_THROWS_AS(classify_intervals({2, {1, 2, 3, 1, 2}}, 1), Error);
}

TEST_CASE("extension table") {
    CHECK_FALSE(interval_extends(IntervalType::I, 3, 3));
    CHECK(interval_extends(IntervalType::I, 2, 2));
    CHECK_FALSE(interval_extends(IntervalType::II, 3, 2));
    CHECK_FALSE(interval_extends(IntervalType::III, 2, 3));
    CHECK_FALSE(interval_extends(IntervalType::IV, 2, 2));
    CHECK(interval_extends(IntervalType::IV, 3, 3));
    CHECK(interval_extends(IntervalType::empty, 2, 3));
    CHECK_FALSE(interval_extends(IntervalType::empty, 3, 3));
}

TEST_CASE("extension table matches exhaustive interval fills") {
    // An entry is true iff every interval of that type, of any hub pattern,
    // extends. Interval positions 1..m sit between two hub-1 spokes, which
    // therefore carry colors 2 or 3.
    std::map<std::tuple<IntervalType, int, int>, bool> always;
    for (int m = 1; m <= 8; ++m) {
        std::vector<int> hubs(static_cast<std::size_t>(m), 2);
        for (int mask = 0; mask < (1 << m); ++mask) {
            for (int i = 0; i < m; ++i) {
                hubs[i] = (mask >> i & 1) ? 3 : 2;
            }
            const int first = hubs.front();
            const int last = hubs.back();
            const IntervalType type = first == 2 ? (last == 2 ? IntervalType::I : IntervalType::II)
                                                 : (last == 2 ? IntervalType::III : IntervalType::IV);
            for (int cu = 2; cu <= 3; ++cu) {
                for (int cv = 2; cv <= 3; ++cv) {
                    std::vector<int> fill(static_cast<std::size_t>(m), 1);
                    bool found = false;
                    while (!found) {
                        bool ok = true;
                        for (int i = 0; i < m && ok; ++i) {
                            const int left = i == 0 ? cu : fill[i - 1];
                            ok = fill[i] != hubs[i] && fill[i] != left;
                        }
                        found = ok && fill[m - 1] != cv;
                        int pos = 0;
                        while (pos < m && ++fill[pos] == 4) {
                            fill[pos++] = 1;
                        }
                        if (pos == m) {
                            break;
                        }
                    }
                    auto [it, fresh] = always.try_emplace({type, cu, cv}, found);
                    it->second = it->second && found;
                }
            }
        }
    }
    for (const auto& [key, value] : always) {
        const auto [type, cu, cv] = key;
        CAPTURE(to_string(type));
        CAPTURE(cu);
        CAPTURE(cv);
        CHECK(interval_extends(type, cu, cv) == value);
    }
    CHECK(always.size() == 16);
}

TEST_CASE("hub-split coloring on every small instance") {
    for (int k = 1; k <= 4; ++k) {
        for (const auto& inst : all_instances(k)) {
            const auto g = hub_split_graph(inst);
            const auto colors = hub_split_three_color(inst);
            const int len = 2 * k + 1;
            CHECK(proper(g, colors));
            for (int h = 1; h <= 3; ++h) {
                CHECK(colors[len - 1 + h] == h);
            }
            for (int c : colors) {
                CHECK((c >= 1 && c <= 3));
            }
        }
    }
}
