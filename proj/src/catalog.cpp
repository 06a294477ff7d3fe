#include "fracol/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace fracol {

namespace {

int parse_count(std::string_view text, std::string_view name) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
        throw Error(ErrorKind::invalid_input, "bad parameter '" + std::string(text) + "' in '" + std::string(name) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

bool triangle_with(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v) {
    for (Vertex w : adj[u]) {
        if (std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end()) {
            return true;
        }
    }
    return false;
}

}  // namespace

Graph cycle_graph(int n) {
    if (n < 3) {
        throw Error(ErrorKind::invalid_input, "cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n) {
        throw Error(ErrorKind::invalid_input, "generalized Petersen P(n,k) needs n >= 3 and 1 <= k < n/2");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + k) % n);
        edges.emplace_back(i, n + i);
    }
    return Graph(2 * n, edges);
}

Graph cycle_power(int n, int p) {
    if (n < 3 || p < 1) {
        throw Error(ErrorKind::invalid_input, "cycle power needs n >= 3 and p >= 1");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int d = 1; d <= p; ++d) {
            int j = (i + d) % n;
            if (j != i) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

Graph strong_product_c5_k2() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(2 * i, 2 * i + 1);
        const int j = (i + 1) % 5;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                edges.emplace_back(2 * i + a, 2 * j + b);
            }
        }
    }
    return Graph(10, edges);
}

Graph cube_graph() {
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v) {
        for (int bit = 1; bit < 8; bit <<= 1) {
            if ((v ^ bit) > v) {
                edges.emplace_back(v, v ^ bit);
            }
        }
    }
    return Graph(8, edges);
}

Graph builtin_graph(std::string_view name) {
    const auto parts = split(name, ':');
    const auto kind = parts.front();
    if (kind == "cycle" && parts.size() == 2) {
        return cycle_graph(parse_count(parts[1], name));
    }
    if (kind == "path" && parts.size() == 2) {
        return path_graph(parse_count(parts[1], name));
    }
    if (kind == "k" && parts.size() == 2) {
        return complete_graph(parse_count(parts[1], name));
    }
    if (kind == "petersen" && parts.size() == 3) {
        return generalized_petersen(parse_count(parts[1], name), parse_count(parts[2], name));
    }
    if (kind == "cycle_power" && parts.size() == 3) {
        return cycle_power(parse_count(parts[1], name), parse_count(parts[2], name));
    }
    if (name == "strongprod_c5_k2") {
        return strong_product_c5_k2();
    }
    if (name == "cube") {
        return cube_graph();
    }
    throw Error(ErrorKind::invalid_input, "unknown builtin graph '" + std::string(name) + "'");
}

std::vector<std::string> builtin_catalog() {
    return {
        "cycle:<n>            cycle C_n",
        "path:<n>             path on n vertices",
        "k:<n>                complete graph K_n",
        "petersen:<n>:<k>     generalized Petersen graph P(n,k)",
        "cycle_power:<n>:<p>  p-th power of C_n (cycle_power:8:2 is C8^2)",
        "strongprod_c5_k2     strong product C5 x K2",
        "cube                 3-dimensional cube Q3",
    };
}

Graph load_graph(const std::string& source) {
    static constexpr std::string_view prefixes[] = {"cycle:", "path:", "k:", "petersen:", "cycle_power:"};
    const bool builtin = source == "strongprod_c5_k2" || source == "cube" ||
                         std::any_of(std::begin(prefixes), std::end(prefixes),
                                     [&](std::string_view p) { return source.starts_with(p); });
    if (builtin) {
        return builtin_graph(source);
    }
    std::ifstream in(source);
    if (!in) {
        throw Error(ErrorKind::invalid_input, "cannot open graph file '" + source + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_edge_list(text.str());
}

Graph random_subcubic_triangle_free(const GeneratorOptions& options) {
    const int n = options.n;
    if (n < 1) {
        throw Error(ErrorKind::invalid_input, "generator needs n >= 1");
    }
    std::mt19937_64 rng(options.seed);
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
        std::vector<Edge> edges;
        auto try_join = [&](Vertex u, Vertex v) {
            if (u == v || adj[u].size() >= 3 || adj[v].size() >= 3) {
                return;
            }
            if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end() || triangle_with(adj, u, v)) {
                return;
            }
            adj[u].push_back(v);
            adj[v].push_back(u);
            edges.emplace_back(u, v);
        };

        std::vector<Vertex> stubs;
        for (Vertex v = 0; v < n; ++v) {
            stubs.insert(stubs.end(), 3, v);
        }
        std::shuffle(stubs.begin(), stubs.end(), rng);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            try_join(stubs[i], stubs[i + 1]);
        }

        std::vector<Edge> candidates;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                candidates.emplace_back(u, v);
            }
        }
        std::shuffle(candidates.begin(), candidates.end(), rng);
        for (auto [u, v] : candidates) {
            try_join(u, v);
        }

        Graph g(n, edges);
        if (!is_connected(g)) {
            continue;
        }
        if (options.biconnected && !is_biconnected(g)) {
            continue;
        }
        if (options.girth_max) {
            const auto gr = girth(g);
            if (!gr.length || *gr.length > *options.girth_max) {
                continue;
            }
        }
        return g;
    }
    throw Error(ErrorKind::resource_cap, "generator gave up after " + std::to_string(options.max_attempts) +
                                             " attempts for n=" + std::to_string(n));
}

}  // namespace fracol
