// fracol: exact fractional chromatic numbers and a:b coloring certificates
// for triangle-free subcubic graphs.

#include "fracol/admissible.hpp"
#include "fracol/catalog.hpp"
#include "fracol/composer.hpp"
#include "fracol/lp.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_invalid_input = 2,
    exit_out_of_scope = 3,
    exit_resource_cap = 4,
};

int exit_code_for(fracol::ErrorKind kind) {
    switch (kind) {
    case fracol::ErrorKind::invalid_input: return exit_invalid_input;
    case fracol::ErrorKind::out_of_scope: return exit_out_of_scope;
    case fracol::ErrorKind::resource_cap: return exit_resource_cap;
    case fracol::ErrorKind::internal: return exit_verification_failed;
    }
    return exit_verification_failed;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw fracol::Error(fracol::ErrorKind::invalid_input, "cannot write '" + path + "'");
    }
    out << text;
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw fracol::Error(fracol::ErrorKind::invalid_input, "cannot open '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw fracol::Error(fracol::ErrorKind::invalid_input, "'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fractional chromatic numbers and a:b coloring certificates"};
    app.require_subcommand(1);

    std::string input, out_path, cert_path;
    std::uint64_t seed = 0;
    int retries = 32;
    std::size_t mis_cap = fracol::default_mis_cap;
    unsigned jobs = 1;
    bool no_fallback = false;

    auto* chif = app.add_subcommand("chif", "print the exact fractional chromatic number");
    chif->add_option("input", input, "edge-list file or builtin name")->required();
    chif->add_option("--mis-cap", mis_cap, "maximal independent set limit");
    chif->add_option("--out", out_path, "write the optimal LP solution as JSON");

    auto* partition = app.add_subcommand("partition", "greedy admissible partition of a 2-connected graph");
    partition->add_option("input", input, "edge-list file or builtin name")->required();
    partition->add_option("--seed", seed, "color preference seed");
    partition->add_option("--out", out_path, "write the partition as JSON");

    auto* certify = app.add_subcommand("certify", "construct a verified a:b coloring certificate");
    certify->add_option("input", input, "edge-list file or builtin name")->required();
    certify->add_option("--seed", seed, "first partition seed");
    certify->add_option("--retries", retries, "partition attempts per block")->check(CLI::PositiveNumber);
    certify->add_option("--mis-cap", mis_cap, "maximal independent set limit for the LP fallback");
    certify->add_option("--jobs", jobs, "threads for the per-triple 3-coloring searches");
    certify->add_flag("--no-fallback", no_fallback, "fail instead of falling back to the exact LP");
    certify->add_option("--out", out_path, "certificate path (default: stdout)");

    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    verify->add_option("graph", input, "edge-list file or builtin name")->required();
    verify->add_option("certificate", cert_path, "certificate JSON")->required();

    fracol::GeneratorOptions gen_options;
    int girth_max = 0;
    auto* gen = app.add_subcommand("gen", "random connected triangle-free graph with maximum degree 3");
    gen->add_option("--n", gen_options.n, "vertex count")->required();
    gen->add_option("--seed", gen_options.seed, "generator seed");
    gen->add_option("--girth-max", girth_max, "reject graphs whose girth exceeds this");
    gen->add_flag("--biconnected", gen_options.biconnected, "require a 2-connected graph");
    gen->add_option("--out", out_path, "edge-list path (default: stdout)");

    std::string builtin_name;
    auto* catalog = app.add_subcommand("catalog", "list builtin graphs, or print one as an edge list");
    catalog->add_option("name", builtin_name, "builtin to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid_input;
    }

    try {
        if (*chif) {
            const auto g = fracol::load_graph(input);
            const auto result = fracol::fractional_chromatic_number(g, mis_cap);
            std::cout << fracol::to_string(result.value) << '\n';
            if (!out_path.empty()) {
                write_text(out_path, fracol::to_json(result.solution).dump(2) + "\n");
            }
            return exit_ok;
        }
        if (*partition) {
            const auto g = fracol::load_graph(input);
            const auto p = fracol::greedy_partition(g, seed);
            const auto endgame = p.endgame_forbidden();
            std::cout << "triples " << p.triples.size() << "\n"
                      << "max_forbidden " << p.max_forbidden_before_endgame() << "\n"
                      << "endgame_forbidden " << endgame[0] << ' ' << endgame[1] << " (bound "
                      << fracol::endgame_bound(static_cast<int>(p.witness_cycle.size())) << ")\n";
            if (!out_path.empty()) {
                nlohmann::json doc{{"graph_hash", fracol::graph_hash(g)},
                                   {"seed", seed},
                                   {"triples", fracol::to_json(p.triples)},
                                   {"coloring", p.coloring},
                                   {"order", p.order},
                                   {"forbidden", p.forbidden}};
                write_text(out_path, doc.dump(2) + "\n");
            }
            return exit_ok;
        }
        if (*certify) {
            const auto g = fracol::load_graph(input);
            fracol::PipelineConfig config;
            config.seed = seed;
            config.max_retries = retries;
            config.lp_fallback = !no_fallback;
            config.mis_cap = mis_cap;
            config.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
            const auto cert = fracol::certify(g, config);
            write_text(out_path, fracol::to_json(cert).dump(2) + "\n");
            std::cerr << "ratio " << fracol::to_string(cert.ratio()) << " path " << cert.provenance.path
                      << " retries " << cert.provenance.retries << '\n';
            return exit_ok;
        }
        if (*verify) {
            const auto g = fracol::load_graph(input);
            const auto check = fracol::verify_document(g, read_json(cert_path));
            if (!check) {
                std::cerr << "invalid: " << check.reason << '\n';
                return exit_verification_failed;
            }
            std::cout << "valid\n";
            return exit_ok;
        }
        if (*gen) {
            if (girth_max > 0) {
                gen_options.girth_max = girth_max;
            }
            write_text(out_path, fracol::to_edge_list(fracol::random_subcubic_triangle_free(gen_options)));
            return exit_ok;
        }
        if (*catalog) {
            if (builtin_name.empty()) {
                for (const auto& line : fracol::builtin_catalog()) {
                    std::cout << line << '\n';
                }
            } else {
                std::cout << fracol::to_edge_list(fracol::builtin_graph(builtin_name));
            }
            return exit_ok;
        }
    } catch (const fracol::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return exit_invalid_input;
}
