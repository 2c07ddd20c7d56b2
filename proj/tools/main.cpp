#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchbook/generators.hpp"
#include "matchbook/io.hpp"
#include "matchbook/oracle.hpp"
#include "matchbook/reduction.hpp"

namespace fs = std::filesystem;
using namespace matchbook;
using nlohmann::json;

namespace {

// Exit-code taxonomy: 0 ok, 2 parse, 3 validation, 4 infeasible or cap,
// 5 internal invariant. Shell pipelines can tell "not outerplanar" from
// "bug" this way.
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitInternal = 5;

int exit_code_for(const Error& err) {
    if (err.code() == errc::parse) return kExitParse;
    if (err.code() == errc::cap_exceeded) return kExitInfeasible;
    if (is_internal_error(err.code())) return kExitInternal;
    return kExitValidation;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::parse, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::parse, "cannot open '" + path + "' for writing");
    out << text;
}

json report_to_json(const VerificationReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
        json item;
        item["kind"] = to_string(v.kind);
        if (v.vertex >= 0) item["vertex"] = v.vertex;
        json edges = json::array();
        for (const Edge& e : v.edges) edges.push_back({e.u, e.v});
        item["edges"] = edges;
        violations.push_back(item);
    }
    return json{{"ok", report.ok},
                {"pages_used", report.pages_used},
                {"delta", report.delta},
                {"dispersable", report.dispersable},
                {"violations", violations}};
}

int cmd_embed(const std::string& graph_path, const std::string& out_path,
              const std::string& render_path) {
    Graph g = parse_graph(read_input(graph_path));
    BookEmbedding emb = embed_general(g);
    VerificationReport report = verify(g, emb);
    write_output(out_path, serialize_certificate(emb));
    if (!render_path.empty()) write_output(render_path, render_svg(g, emb));
    std::cerr << "pages=" << report.pages_used << " delta=" << report.delta
              << (report.dispersable ? " dispersable" : "") << "\n";
    bool full = g.edge_count() == 0 || report.pages_used == emb.pages;
    return report.ok && full ? 0 : kExitInternal;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, bool as_json,
               const std::string& render_path, bool force) {
    Graph g = parse_graph(read_input(graph_path));
    BookEmbedding emb = parse_certificate(read_input(cert_path));
    VerificationReport report = verify(g, emb);
    if (as_json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << (report.ok ? "ok" : "invalid") << " pages_used=" << report.pages_used
                  << " delta=" << report.delta
                  << " dispersable=" << (report.dispersable ? "yes" : "no") << "\n";
        for (const Violation& v : report.violations) {
            std::cout << "violation " << to_string(v.kind);
            if (v.vertex >= 0) std::cout << " at vertex " << v.vertex;
            for (const Edge& e : v.edges) std::cout << " (" << e.u << "," << e.v << ")";
            std::cout << "\n";
        }
    }
    if (!render_path.empty()) {
        RenderStyle style;
        style.force = force;
        write_output(render_path, render_svg(g, emb, style));
    }
    return report.ok ? 0 : kExitValidation;
}

int cmd_exact(const std::string& graph_path, int max_pages, bool fixed_order, bool allow_large,
              const std::string& out_path) {
    Graph g = parse_graph(read_input(graph_path));
    if (max_pages <= 0) max_pages = std::max(1, g.edge_count());

    if (fixed_order) {
        std::vector<Vertex> identity(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) identity[v] = v;
        SpineOrder order(identity);
        for (int k = std::max(1, g.max_degree()); k <= max_pages; ++k) {
            auto witness = exact_mbt_fixed_order(g, order, k);
            if (witness) {
                std::cout << "mbt=" << (g.edge_count() == 0 ? 0 : k) << "\n";
                if (!out_path.empty()) write_output(out_path, serialize_certificate(*witness));
                return 0;
            }
        }
        std::cerr << "infeasible within " << max_pages << " pages\n";
        return kExitInfeasible;
    }

    auto result = exact_mbt(g, max_pages, allow_large);
    if (!result) {
        std::cerr << "infeasible within " << max_pages << " pages\n";
        return kExitInfeasible;
    }
    std::cout << "mbt=" << result->mbt << "\n";
    std::cerr << "orders_tried=" << result->orders_tried
              << " nodes_expanded=" << result->nodes_expanded << "\n";
    if (!out_path.empty()) write_output(out_path, serialize_certificate(result->witness));
    return 0;
}

int cmd_gen(const std::string& family, int n, std::uint64_t seed, double prob,
            const std::string& out_path) {
    Graph g;
    if (family == "maximal") {
        g = gen_maximal_outerplanar(n, seed);
    } else if (family == "random") {
        GenSpec spec;
        spec.family = family;
        spec.n = n;
        spec.seed = seed;
        spec.chord_keep_prob = prob;
        g = gen_biconnected_outerplanar(spec);
    } else {
        g = gen_family(family, n);
    }
    write_output(out_path, serialize_graph(g));
    return 0;
}

struct BenchRow {
    std::string name;
    int n = 0;
    int delta = 0;
    int pages = 0;
    double ms = 0.0;
    bool ok = false;
    std::string error;
};

int cmd_bench(std::string corpus, int jobs) {
    if (corpus.empty()) {
        if (const char* env = std::getenv("MATCHBOOK_CORPUS")) corpus = env;
    }
    if (corpus.empty())
        throw Error(errc::precondition, "no corpus directory (use --corpus or MATCHBOOK_CORPUS)");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus))
        if (entry.is_regular_file() && entry.path().extension() == ".graph")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error(errc::precondition, "no .graph files in '" + corpus + "'");

    std::vector<BenchRow> rows(files.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= files.size()) break;
            BenchRow& row = rows[i];
            row.name = files[i].filename().string();
            try {
                Graph g = parse_graph(read_input(files[i].string()));
                row.n = g.vertex_count();
                row.delta = g.max_degree();
                auto start = std::chrono::steady_clock::now();
                BookEmbedding emb = embed_general(g);
                auto report = verify(g, emb);
                row.ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
                row.pages = report.pages_used;
                row.ok = report.ok;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };

    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::printf("%-32s %6s %6s %6s %9s  %s\n", "graph", "n", "delta", "pages", "ms", "status");
    int failed = 0;
    for (const BenchRow& row : rows) {
        if (!row.error.empty()) {
            ++failed;
            std::printf("%-32s %6d %6s %6s %9s  error: %s\n", row.name.c_str(), row.n, "-", "-",
                        "-", row.error.c_str());
            continue;
        }
        if (!row.ok) ++failed;
        std::printf("%-32s %6d %6d %6d %9.2f  %s\n", row.name.c_str(), row.n, row.delta, row.pages,
                    row.ms, row.ok ? "ok" : "INVALID");
    }
    std::printf("%zu graphs, %zu ok, %d failed\n", rows.size(), rows.size() - failed, failed);
    return failed == 0 ? 0 : kExitValidation;
}

int cmd_enumerate(int n, bool count_only) {
    if (count_only) {
        long long count = 0;
        enumerate_biconnected_outerplanar(n, [&](const Graph&) { ++count; });
        std::cout << count << "\n";
        return 0;
    }
    bool first = true;
    enumerate_biconnected_outerplanar(n, [&](const Graph& g) {
        if (!first) std::cout << "\n";
        first = false;
        std::cout << serialize_graph(g);
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching book embeddings of outerplanar graphs"};
    app.require_subcommand(1);

    std::string graph_path, cert_path, out_path, render_path, corpus, family = "random";
    int n = 0, max_pages = 0, jobs = 1;
    std::uint64_t seed = 0;
    double prob = 1.0;
    bool as_json = false, fixed_order = false, allow_large = false, force = false,
         count_only = false;

    auto* embed = app.add_subcommand("embed", "construct a matching book embedding");
    embed->add_option("-g,--graph", graph_path, "graph document ('-' for stdin)")->required();
    embed->add_option("-o,--output", out_path, "certificate output (default stdout)");
    embed->add_option("--render", render_path, "also write an SVG arc diagram");

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
    verify_cmd->add_option("-g,--graph", graph_path, "graph document")->required();
    verify_cmd->add_option("-c,--certificate", cert_path, "certificate document")->required();
    verify_cmd->add_flag("--json", as_json, "machine-readable report");
    verify_cmd->add_option("--render", render_path, "write an SVG arc diagram");
    verify_cmd->add_flag("--force", force, "render even if verification fails");

    auto* exact = app.add_subcommand("exact", "exact matching book thickness by search");
    exact->add_option("-g,--graph", graph_path, "graph document")->required();
    exact->add_option("--max-pages", max_pages, "page budget (default: edge count)");
    exact->add_flag("--fixed-order", fixed_order, "search pages for the identity spine only");
    exact->add_flag("--allow-large", allow_large, "override the search size cap");
    exact->add_option("-o,--output", out_path, "write the witness certificate");

    auto* gen = app.add_subcommand("gen", "generate corpus graphs");
    gen->add_option("--family", family,
                    "cycle|path|star|fan|bowtie|diamond|k4|maximal|random (default random)");
    gen->add_option("-n,--vertices", n, "vertex count")->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--prob", prob, "chord keep probability (random family)");
    gen->add_option("-o,--output", out_path, "graph output (default stdout)");

    auto* bench = app.add_subcommand("bench", "embed and verify a corpus directory");
    bench->add_option("--corpus", corpus, "directory of .graph files (or MATCHBOOK_CORPUS)");
    bench->add_option("--jobs", jobs, "worker threads");

    auto* enumerate = app.add_subcommand("enumerate", "stream biconnected outerplanar graphs");
    enumerate->add_option("-n,--vertices", n, "vertex count")->required();
    enumerate->add_flag("--count", count_only, "print only how many");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*embed) return cmd_embed(graph_path, out_path, render_path);
        if (*verify_cmd) return cmd_verify(graph_path, cert_path, as_json, render_path, force);
        if (*exact) return cmd_exact(graph_path, max_pages, fixed_order, allow_large, out_path);
        if (*gen) return cmd_gen(family, n, seed, prob, out_path);
        if (*bench) return cmd_bench(corpus, jobs);
        if (*enumerate) return cmd_enumerate(n, count_only);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
