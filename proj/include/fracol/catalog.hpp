#pragma once

#include "fracol/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracol {

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);

/// P(n, k): outer n-cycle u_i = i, inner vertices v_i = n + i joined to
/// v_{i+k}, spokes u_i v_i.
Graph generalized_petersen(int n, int k);

/// C_n^p: i ~ j whenever their cyclic distance is at most p.
Graph cycle_power(int n, int p);

/// C5 strong product K2; vertex (i, a) has index 2i + a.
Graph strong_product_c5_k2();

/// The 3-cube Q3; vertices are 3-bit words joined at Hamming distance one.
Graph cube_graph();

/// Resolves a builtin name: cycle:<n>, path:<n>, k:<n>, petersen:<n>:<k>,
/// cycle_power:<n>:<p>, strongprod_c5_k2, cube. Throws Error(invalid_input).
Graph builtin_graph(std::string_view name);

std::vector<std::string> builtin_catalog();

/// Builtin name if it parses as one, otherwise an edge-list file path.
Graph load_graph(const std::string& source);

struct GeneratorOptions {
    int n = 14;
    std::uint64_t seed = 0;
    std::optional<int> girth_max;
    bool biconnected = false;
    int max_attempts = 20000;
};

/// Random connected triangle-free graph with maximum degree 3. Stub pairing
/// with triangle rejection, then a second pass joining deficient vertices;
/// not uniform over any class. Deterministic in the options.
Graph random_subcubic_triangle_free(const GeneratorOptions& options);

}  // namespace fracol
