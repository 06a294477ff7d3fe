#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracol/catalog.hpp"
#include "fracol/composer.hpp"
#include "fracol/lp.hpp"

#include <functional>

using namespace fracol;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::internal;
}

std::vector<AdmissibleTriple> c6_antipodal_partition() {
    return {{{{{0}, {3}, {}}}}, {{{{1}, {4}, {}}}}, {{{{2}, {5}, {}}}}};
}

}  // namespace

TEST_CASE("composing C6 from three antipodal triples") {
    const auto g = cycle_graph(6);
    const auto partition = c6_antipodal_partition();
    std::vector<std::vector<int>> colorings;
    for (const auto& t : partition) {
        const auto aux = build_aux(g, t);
        REQUIRE(aux.quotient.order() == 3);
        colorings.push_back({0, 1, 2});
    }
    const auto c = compose(g, partition, colorings);
    CHECK(validate(g, c));
    CHECK(c.fold() == 4);
    CHECK(c.palette_size() == 9);
    CHECK(c.palette() == std::vector<Color>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    // Vertex 0 is X_1^1 whose hub took block color 1: it gets the other two.
    const auto& zero = c.colors(0);
    CHECK(std::count(zero.begin(), zero.end(), 2) == 1);
    CHECK(std::count(zero.begin(), zero.end(), 3) == 1);
    CHECK(std::count(zero.begin(), zero.end(), 1) == 0);
    CHECK(gvalue(c) >= fractional_chromatic_number(g).value);
}

TEST_CASE("compose rejects bad inputs") {
    const auto g = cycle_graph(6);
    auto partition = c6_antipodal_partition();
    const std::vector<std::vector<int>> three(3, std::vector<int>{0, 1, 2});

    auto short_partition = partition;
    short_partition.pop_back();
    CHECK_THROWS_WITH_AS(compose(g, short_partition, {three[0], three[1]}), doctest::Contains("cover"), Error);

    auto improper = three;
    improper[1] = {0, 0, 1};
    CHECK_THROWS_WITH_AS(compose(g, partition, improper), doctest::Contains("triple 2"), Error);

    CHECK_THROWS_AS(compose(g, partition, {three[0]}), Error);
}

TEST_CASE("certify small named graphs") {
    struct Case {
        Graph g;
        Rational chi_f;
    };
    const std::vector<Case> cases{{cycle_graph(5), Rational(5, 2)},
                                  {cube_graph(), Rational(2)},
                                  {generalized_petersen(7, 2), Rational(14, 5)},
                                  {cycle_graph(4), Rational(2)},
                                  {cycle_graph(6), Rational(2)}};
    for (const auto& [g, chi_f] : cases) {
        const auto cert = certify(g);
        CHECK(verify(g, cert));
        CHECK(cert.ratio() >= chi_f);
        CHECK(cert.provenance.path == "composed");
        CHECK(cert.ratio() <= Rational(126, 43));
        CHECK(cert.graph_hash == graph_hash(g));
    }
}

TEST_CASE("certify decomposes into blocks") {
    // Two 5-cycles joined by the bridge 0-5, plus a pendant edge 4-10.
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 1) % 5);
    }
    edges.emplace_back(0, 5);
    edges.emplace_back(4, 10);
    const auto g = build_graph(11, edges);
    const auto cert = certify(g);
    CHECK(verify(g, cert));
    CHECK(cert.provenance.blocks.size() == 4);
    CHECK(cert.provenance.path == "composed");
    CHECK(cert.ratio() >= Rational(5, 2));

    const auto disconnected = build_graph(4, std::vector<Edge>{{0, 1}});
    const auto dc = certify(disconnected);
    CHECK(verify(disconnected, dc));
    CHECK(dc.provenance.path == "trivial");
    CHECK(dc.ratio() == 2);
}

TEST_CASE("girth 7 and beyond falls back to the LP") {
    const auto c7 = cycle_graph(7);
    const auto cert = certify(c7);
    CHECK(verify(c7, cert));
    CHECK(cert.provenance.path == "lp_fallback");
    CHECK(cert.ratio() == Rational(7, 3));

    PipelineConfig strict;
    strict.lp_fallback = false;
    CHECK(kind_of([&] { certify(c7, strict); }) == ErrorKind::out_of_scope);
}

TEST_CASE("certify input checks") {
    CHECK(kind_of([] { certify(complete_graph(3)); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { certify(complete_graph(5)); }) == ErrorKind::invalid_input);
    CHECK(kind_of([] { certify(build_graph(0, {})); }) == ErrorKind::invalid_input);
}

TEST_CASE("verify catches tampering") {
    const auto g = generalized_petersen(7, 2);
    const auto cert = certify(g);
    REQUIRE(verify(g, cert));

    auto dropped = cert;
    auto assignment = cert.coloring.assignment();
    assignment[3].pop_back();
    dropped.coloring = FoldColoring(cert.coloring.fold(), assignment);
    CHECK_FALSE(verify(g, dropped));

    auto understated = cert;
    understated.a -= 1;
    CHECK_FALSE(verify(g, understated));

    auto clash = cert;
    assignment = cert.coloring.assignment();
    const Vertex neighbor = g.neighbors(0).front();
    assignment[0] = assignment[neighbor];
    clash.coloring = FoldColoring(cert.coloring.fold(), assignment);
    const auto clash_check = verify(g, clash);
    CHECK_FALSE(clash_check);
    CHECK(clash_check.reason.find("shares color") != std::string::npos);

    const auto wrong_graph = verify(cycle_graph(14), cert);
    CHECK_FALSE(wrong_graph);
    CHECK(wrong_graph.reason.find("hash") != std::string::npos);
}

TEST_CASE("certificate documents") {
    const auto g = cube_graph();
    const auto cert = certify(g);
    const auto doc = to_json(cert);
    CHECK(doc.contains("graph_hash"));
    CHECK(doc.contains("provenance"));
    CHECK(doc["ratio"] == to_string(cert.ratio()));
    CHECK(verify_document(g, doc));

    const auto back = certificate_from_json(doc);
    CHECK(back.a == cert.a);
    CHECK(back.b == cert.b);
    CHECK(back.coloring == cert.coloring);
    CHECK(to_json(back) == doc);

    auto lying = doc;
    lying["ratio"] = "1/1";
    CHECK_FALSE(verify_document(g, lying));
    auto broken = doc;
    broken.erase("coloring");
    CHECK_FALSE(verify_document(g, broken));
}

TEST_CASE("certificates are deterministic") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto g = random_subcubic_triangle_free({.n = 30, .seed = seed, .girth_max = 6, .biconnected = true});
        PipelineConfig config;
        config.seed = seed;
        const auto first = to_json(certify(g, config)).dump();
        CHECK(to_json(certify(g, config)).dump() == first);
        config.jobs = 4;
        CHECK(to_json(certify(g, config)).dump() == first);
    }
}

TEST_CASE("generated graphs certify within the composed bound") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto g = random_subcubic_triangle_free({.n = 16, .seed = seed, .girth_max = 6, .biconnected = true});
        const auto cert = certify(g);
        CHECK(verify(g, cert));
        CHECK(cert.ratio() >= fractional_chromatic_number(g).value);
        if (cert.provenance.path == "composed") {
            CHECK(cert.ratio() <= Rational(126, 43));
        }
    }
}
