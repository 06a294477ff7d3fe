#include "fracol/composer.hpp"

#include "fracol/lp.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <queue>
#include <mutex>
#include <thread>

namespace fracol {

FoldColoring compose(const Graph& g, const std::vector<AdmissibleTriple>& partition,
                     const std::vector<std::vector<int>>& aux_colorings) {
    if (aux_colorings.size() != partition.size()) {
        throw Error(ErrorKind::invalid_input, "compose: need one 3-coloring per triple");
    }
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < partition.size(); ++i) {
        for (Vertex v : partition[i].members()) {
            if (!g.contains(v) || owner[v] >= 0) {
                throw Error(ErrorKind::invalid_input, "compose: vertex " + std::to_string(v) +
                                                          " is outside the graph or in two triples");
            }
            owner[v] = static_cast<int>(i);
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (owner[v] < 0) {
            throw Error(ErrorKind::invalid_input, "compose: partition does not cover vertex " + std::to_string(v));
        }
    }

    std::map<Vertex, std::vector<Color>> assignment;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const auto aux = build_aux(g, partition[i]);
        const auto& c = aux_colorings[i];
        const std::string which = "compose: coloring of triple " + std::to_string(i + 1);
        if (static_cast<int>(c.size()) != aux.quotient.order()) {
            throw Error(ErrorKind::invalid_input, which + " has the wrong length");
        }
        for (int value : c) {
            if (value < 0 || value > 2) {
                throw Error(ErrorKind::invalid_input, which + " uses a color outside 0..2");
            }
        }
        for (auto [u, v] : aux.quotient.edges()) {
            if (c[u] == c[v]) {
                throw Error(ErrorKind::invalid_input, which + " is not proper on G'(X)");
            }
        }
        const Color base = 3 * static_cast<Color>(i) + 1;
        std::array<int, 3> part_of_hub{-1, -1, -1};
        std::vector<int> x_part(static_cast<std::size_t>(g.order()), -1);
        for (int j = 0; j < 3; ++j) {
            for (Vertex x : partition[i].parts[j]) {
                x_part[x] = j;
            }
            part_of_hub[j] = c[aux.hubs[j]];
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            auto& list = assignment[v];
            if (x_part[v] >= 0) {
                for (int s = 0; s < 3; ++s) {
                    if (s != part_of_hub[x_part[v]]) {
                        list.push_back(base + s);
                    }
                }
            } else {
                list.push_back(base + c[aux.quotient_of[v]]);
            }
        }
    }
    FoldColoring out(static_cast<int>(partition.size()) + 1, std::move(assignment));
    if (auto check = validate(g, out); !check) {
        throw Error(ErrorKind::internal, "compose produced an invalid coloring: " + check.reason);
    }
    return out;
}

namespace {

constexpr int max_certificate_fold = 1'000'000;

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto threads = std::min<std::size_t>(jobs, count);
    for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    workers.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// Blocks in BFS order of the block-cut tree, component by component, so each
/// block meets the union of its predecessors in at most one vertex.
std::vector<VertexSet> blocks_in_tree_order(const Graph& g) {
    const auto decomposition = blocks(g);
    const auto& all = decomposition.blocks;
    std::vector<std::vector<std::size_t>> blocks_at(static_cast<std::size_t>(g.order()));
    for (std::size_t b = 0; b < all.size(); ++b) {
        for (Vertex v : all[b]) {
            blocks_at[v].push_back(b);
        }
    }
    std::vector<char> seen(all.size(), 0);
    std::vector<VertexSet> out;
    for (std::size_t root = 0; root < all.size(); ++root) {
        if (seen[root]) {
            continue;
        }
        std::queue<std::size_t> queue;
        queue.push(root);
        seen[root] = 1;
        while (!queue.empty()) {
            const auto b = queue.front();
            queue.pop();
            out.push_back(all[b]);
            for (Vertex v : all[b]) {
                for (auto other : blocks_at[v]) {
                    if (!seen[other]) {
                        seen[other] = 1;
                        queue.push(other);
                    }
                }
            }
        }
    }
    return out;
}

struct BlockResult {
    FoldColoring coloring;  // on local vertices 0..|block|-1
    BlockProvenance provenance;
};

BlockResult certify_block(const Graph& block, const PipelineConfig& config) {
    BlockResult out;
    auto& prov = out.provenance;
    const int n = block.order();
    if (n <= 2) {
        std::map<Vertex, std::vector<Color>> assignment;
        for (Vertex v = 0; v < n; ++v) {
            assignment[v] = {static_cast<Color>(v) + 1};
        }
        out.coloring = FoldColoring(1, std::move(assignment));
        prov.path = "trivial";
        return out;
    }

    const auto gr = girth(block);
    if (gr.length && *gr.length <= 6) {
        for (int attempt = 0; attempt < std::max(config.max_retries, 1); ++attempt) {
            const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(attempt);
            const auto partition = greedy_partition(block, seed);
            const auto& triples = partition.triples;
            std::vector<ColoringSearch> colorings(triples.size());
            std::vector<AuxGraph> auxes(triples.size());
            parallel_for(triples.size(), config.jobs, [&](std::size_t i) {
                auxes[i] = build_aux(block, triples[i]);
                // Plain search: the pipeline reseeds on failure and has no use for a critical witness.
                const std::pair<Vertex, int> pinned[] = {
                    {auxes[i].hubs[0], 0}, {auxes[i].hubs[1], 1}, {auxes[i].hubs[2], 2}};
                colorings[i] = find_coloring(auxes[i].quotient, 3, pinned);
            });
            const auto failures = std::count_if(colorings.begin(), colorings.end(), [](const auto& r) {
                return r.status != ColorStatus::colorable;
            });
            prov.attempts = attempt + 1;
            prov.failures_per_attempt.push_back(static_cast<int>(failures));
            if (failures > 0) {
                continue;
            }
            std::vector<std::vector<int>> colors;
            for (std::size_t i = 0; i < triples.size(); ++i) {
                const auto& c = colorings[i].colors;
                prov.hub_colors.push_back({c[auxes[i].hubs[0]], c[auxes[i].hubs[1]], c[auxes[i].hubs[2]]});
                colors.push_back(c);
            }
            out.coloring = compose(block, triples, colors);
            prov.path = "composed";
            prov.seed = seed;
            prov.partition = triples;
            return out;
        }
    }

    if (!config.lp_fallback) {
        throw Error(ErrorKind::out_of_scope,
                    gr.length && *gr.length <= 6
                        ? "out of constructive scope: every G'(X) retry failed and the LP fallback is disabled"
                        : "out of constructive scope: block of girth >= 7 and the LP fallback is disabled");
    }
    const auto lp = fractional_chromatic_number(block, config.mis_cap);
    out.coloring = extract_ab_coloring(block, lp.solution);
    prov.path = "lp_fallback";
    return out;
}

FoldColoring to_global(const FoldColoring& local, const VertexSet& vertices) {
    std::map<Vertex, std::vector<Color>> assignment;
    for (const auto& [v, list] : local.assignment()) {
        assignment.emplace(vertices[v], list);
    }
    return FoldColoring(local.fold(), std::move(assignment));
}

AdmissibleTriple to_global(const AdmissibleTriple& local, const VertexSet& vertices) {
    AdmissibleTriple t;
    for (int j = 0; j < 3; ++j) {
        for (Vertex v : local.parts[j]) {
            t.parts[j].push_back(vertices[v]);
        }
    }
    return t;
}

}  // namespace

ColoringCertificate certify(const Graph& g, const PipelineConfig& config) {
    if (g.order() == 0) {
        throw Error(ErrorKind::invalid_input, "certify: empty graph");
    }
    if (g.max_degree() > 3) {
        throw Error(ErrorKind::invalid_input, "certify: maximum degree exceeds 3");
    }
    if (!is_triangle_free(g)) {
        throw Error(ErrorKind::invalid_input, "certify: graph has a triangle");
    }

    ColoringCertificate cert;
    cert.graph_hash = graph_hash(g);
    cert.provenance.seed = config.seed;
    VertexSet covered;
    FoldColoring coloring;
    bool any_fallback = false, any_composed = false;
    for (const auto& vertices : blocks_in_tree_order(g)) {
        auto result = certify_block(induced_subgraph(g, vertices), config);
        auto& prov = result.provenance;
        prov.vertices = vertices;
        for (auto& t : prov.partition) {
            t = to_global(t, vertices);
        }
        any_fallback |= prov.path == "lp_fallback";
        any_composed |= prov.path == "composed";
        if (prov.path == "composed") {
            cert.provenance.retries += prov.attempts - 1;
        }
        auto block_coloring = to_global(result.coloring, vertices);
        if (covered.empty()) {
            coloring = std::move(block_coloring);
            covered = vertices;
        } else {
            if (std::lcm(static_cast<long long>(coloring.fold()), static_cast<long long>(block_coloring.fold())) >
                max_certificate_fold) {
                throw Error(ErrorKind::resource_cap, "certify: folds of the block certificates have too large an lcm");
            }
            coloring = glue(g, covered, vertices, coloring, block_coloring);
            VertexSet merged;
            std::set_union(covered.begin(), covered.end(), vertices.begin(), vertices.end(),
                           std::back_inserter(merged));
            covered = std::move(merged);
        }
        cert.provenance.blocks.push_back(std::move(prov));
    }
    cert.provenance.path = any_fallback ? "lp_fallback" : any_composed ? "composed" : "trivial";
    cert.b = coloring.fold();
    cert.a = static_cast<std::int64_t>(coloring.palette_size());
    cert.coloring = std::move(coloring);
    if (auto check = verify(g, cert); !check) {
        throw Error(ErrorKind::internal, "certify produced a certificate that fails verification: " + check.reason);
    }
    return cert;
}

Check verify(const Graph& g, const ColoringCertificate& cert) {
    if (!cert.graph_hash.empty() && cert.graph_hash != graph_hash(g)) {
        return Check::fail("graph hash mismatch: certificate is for " + cert.graph_hash + ", graph is " +
                           graph_hash(g));
    }
    if (cert.b < 1) {
        return Check::fail("fold b must be positive");
    }
    if (cert.coloring.fold() != cert.b) {
        return Check::fail("coloring fold " + std::to_string(cert.coloring.fold()) + " differs from b = " +
                           std::to_string(cert.b));
    }
    if (auto check = validate(g, cert.coloring); !check) {
        return check;
    }
    const auto used = static_cast<std::int64_t>(cert.coloring.palette_size());
    if (used != cert.a) {
        return Check::fail("palette mismatch: coloring uses " + std::to_string(used) + " colors, a = " +
                           std::to_string(cert.a));
    }
    return Check::pass();
}

nlohmann::json to_json(const ColoringCertificate& cert) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : cert.provenance.blocks) {
        blocks.push_back({{"vertices", b.vertices},
                          {"path", b.path},
                          {"seed", b.seed},
                          {"attempts", b.attempts},
                          {"failures_per_attempt", b.failures_per_attempt},
                          {"partition", to_json(b.partition)},
                          {"hub_colors", b.hub_colors}});
    }
    return {{"graph_hash", cert.graph_hash},
            {"a", cert.a},
            {"b", cert.b},
            {"ratio", to_string(cert.ratio())},
            {"coloring", to_json(cert.coloring)},
            {"provenance",
             {{"seed", cert.provenance.seed},
              {"retries", cert.provenance.retries},
              {"path", cert.provenance.path},
              {"blocks", blocks}}}};
}

ColoringCertificate certificate_from_json(const nlohmann::json& j) {
    ColoringCertificate cert;
    try {
        cert.graph_hash = j.at("graph_hash").get<std::string>();
        cert.a = j.at("a").get<std::int64_t>();
        cert.b = j.at("b").get<int>();
        cert.coloring = fold_coloring_from_json(j.at("coloring"));
        if (j.contains("provenance")) {
            const auto& p = j.at("provenance");
            cert.provenance.seed = p.value("seed", std::uint64_t{0});
            cert.provenance.retries = p.value("retries", 0);
            cert.provenance.path = p.value("path", std::string{});
            for (const auto& b : p.value("blocks", nlohmann::json::array())) {
                BlockProvenance bp;
                bp.vertices = b.value("vertices", VertexSet{});
                bp.path = b.value("path", std::string{});
                bp.seed = b.value("seed", std::uint64_t{0});
                bp.attempts = b.value("attempts", 0);
                bp.failures_per_attempt = b.value("failures_per_attempt", std::vector<int>{});
                bp.partition = partition_from_json(b.value("partition", nlohmann::json::array()));
                bp.hub_colors = b.value("hub_colors", std::vector<std::array<int, 3>>{});
                cert.provenance.blocks.push_back(std::move(bp));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::invalid_input, std::string("malformed certificate: ") + e.what());
    }
    return cert;
}

Check verify_document(const Graph& g, const nlohmann::json& doc) {
    ColoringCertificate cert;
    try {
        cert = certificate_from_json(doc);
    } catch (const Error& e) {
        return Check::fail(e.what());
    }
    if (cert.graph_hash != graph_hash(g)) {
        return Check::fail("graph hash mismatch: certificate is for " + cert.graph_hash + ", graph is " +
                           graph_hash(g));
    }
    if (cert.b < 1) {
        return Check::fail("fold b must be positive");
    }
    const auto claimed = doc.value("ratio", std::string{});
    if (claimed != to_string(cert.ratio())) {
        return Check::fail("ratio '" + claimed + "' does not equal a/b = " + to_string(cert.ratio()));
    }
    return verify(g, cert);
}

}  // namespace fracol
