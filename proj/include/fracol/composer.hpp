#pragma once

#include "fracol/admissible.hpp"
#include "fracol/aux_graph.hpp"
#include "fracol/fold_coloring.hpp"
#include "fracol/graph.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fracol {

/// (k+1)-fold coloring on at most 3k colors from k admissible triples that
/// partition V(G) and a proper 3-coloring (values 0..2) of each G'(X_i).
/// Triple i (1-based) owns colors 3i-2, 3i-1, 3i. A vertex of X_i^j gets
/// the two block colors its hub y_i^j does not use, a vertex of Y_i^j gets
/// the hub's color, and every other vertex gets its own color in G'(X_i).
FoldColoring compose(const Graph& g, const std::vector<AdmissibleTriple>& partition,
                     const std::vector<std::vector<int>>& aux_colorings);

struct PipelineConfig {
    int max_retries = 32;
    std::uint64_t seed = 0;
    bool lp_fallback = true;
    std::size_t mis_cap = default_mis_cap;
    unsigned jobs = 1;
};

/// How one block of the input was certified.
struct BlockProvenance {
    VertexSet vertices;
    std::string path;  // "composed", "lp_fallback" or "trivial"
    std::uint64_t seed = 0;
    int attempts = 0;
    std::vector<int> failures_per_attempt;  // triples whose G' was not 3-colorable
    std::vector<AdmissibleTriple> partition;
    std::vector<std::array<int, 3>> hub_colors;
};

struct Provenance {
    std::uint64_t seed = 0;
    int retries = 0;
    std::string path;  // "composed", "lp_fallback" or "trivial"
    std::vector<BlockProvenance> blocks;
};

struct ColoringCertificate {
    std::string graph_hash;
    std::int64_t a = 0;
    int b = 0;
    FoldColoring coloring;
    Provenance provenance;

    Rational ratio() const { return Rational(a, b); }
};

/// Certifies a triangle-free graph of maximum degree 3. Blocks are certified
/// one by one (partition, per-triple 3-colorings, composition; reseeding on
/// a non-3-colorable G'; exact LP as the fallback) and glued along cut
/// vertices in block-cut-tree BFS order.
ColoringCertificate certify(const Graph& g, const PipelineConfig& config = {});

/// Re-derives everything from the raw coloring; provenance is not trusted.
Check verify(const Graph& g, const ColoringCertificate& cert);

nlohmann::json to_json(const ColoringCertificate& cert);
ColoringCertificate certificate_from_json(const nlohmann::json& j);

/// verify() plus the document-level claims: graph hash and the ratio string.
Check verify_document(const Graph& g, const nlohmann::json& doc);

}  // namespace fracol
