#include "matchbook/generators.hpp"

#include <random>

namespace matchbook {

namespace {

// Bounded draw by modulo; the slight bias is irrelevant for test corpora and
// keeps the sequence a pure function of the engine state.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

void triangulate(std::mt19937_64& rng, int a, int b, std::vector<Edge>& edges) {
    if (b - a < 2) return;
    int k = a + 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(b - a - 1)));
    if (k > a + 1) edges.emplace_back(a, k);
    if (k < b - 1) edges.emplace_back(k, b);
    triangulate(rng, a, k, edges);
    triangulate(rng, k, b, edges);
}

}  // namespace

Graph gen_maximal_outerplanar(int n, std::uint64_t seed) {
    if (n < 3) throw Error(errc::precondition, "need at least 3 vertices");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(2 * n - 3);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    triangulate(rng, 0, n - 1, edges);
    return Graph(n, edges);
}

Graph gen_biconnected_outerplanar(const GenSpec& spec) {
    if (spec.chord_keep_prob < 0.0 || spec.chord_keep_prob > 1.0)
        throw Error(errc::precondition, "chord_keep_prob must be in [0,1]");
    Graph maximal = gen_maximal_outerplanar(spec.n, spec.seed);

    // Separate stream for the keep draws so thinning does not depend on how
    // many draws the triangulation consumed.
    std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
    const int n = spec.n;
    auto is_cycle_edge = [n](const Edge& e) {
        return e.v - e.u == 1 || (e.u == 0 && e.v == n - 1);
    };

    std::vector<Edge> kept;
    for (const Edge& e : maximal.edges()) {
        if (is_cycle_edge(e)) {
            kept.push_back(e);
            continue;
        }
        // 53-bit draw compared against the probability; exact for 0 and 1.
        double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
        if (u < spec.chord_keep_prob) kept.push_back(e);
    }
    return Graph(n, kept);
}

Graph gen_family(std::string_view name, int n) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw Error(errc::precondition, std::string("family needs ") + what);
    };
    std::vector<Edge> edges;
    if (name == "cycle") {
        need(n >= 3, "n >= 3");
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    } else if (name == "path") {
        need(n >= 1, "n >= 1");
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    } else if (name == "star") {
        need(n >= 2, "n >= 2");
        for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    } else if (name == "fan") {
        // path 0..n-2 plus an apex adjacent to every path vertex
        need(n >= 3, "n >= 3");
        for (int i = 0; i + 1 < n - 1; ++i) edges.emplace_back(i, i + 1);
        for (int i = 0; i < n - 1; ++i) edges.emplace_back(i, n - 1);
    } else if (name == "bowtie") {
        need(n == 5, "n == 5");
        edges = {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(2, 3), Edge(2, 4), Edge(3, 4)};
    } else if (name == "diamond") {
        need(n == 4, "n == 4");
        edges = {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3), Edge(0, 2)};
    } else if (name == "k4") {
        need(n == 4, "n == 4");
        edges = {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)};
    } else {
        throw Error(errc::unknown_family, "unknown family '" + std::string(name) + "'");
    }
    return Graph(n, edges);
}

}  // namespace matchbook
