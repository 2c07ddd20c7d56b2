#include "matchbook/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace matchbook {

namespace {

constexpr int kOrderSearchCap = 9;   // (n-1)!/2 spine orders
constexpr int kColoringEdgeCap = 24;

// Backtracking assignment of pages/colors to edges under a symmetric
// conflict relation. Pages above (max used so far + 1) are symmetric
// relabelings, so they are never tried.
struct AssignmentSearch {
    const std::vector<std::vector<int>>& conflicts;  // per edge index
    int budget;
    long long nodes = 0;
    std::vector<int> assigned;

    AssignmentSearch(const std::vector<std::vector<int>>& c, int budget_)
        : conflicts(c), budget(budget_), assigned(c.size(), -1) {}

    bool run(size_t i, int max_used) {
        if (i == assigned.size()) return true;
        int limit = std::min(budget - 1, max_used + 1);
        for (int p = 0; p <= limit; ++p) {
            bool clash = false;
            for (int j : conflicts[i]) {
                if (assigned[j] == p) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            ++nodes;
            assigned[i] = p;
            if (run(i + 1, std::max(max_used, p))) return true;
            assigned[i] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<BookEmbedding> exact_mbt_fixed_order(const Graph& g, const SpineOrder& order,
                                                   int page_budget, long long* nodes_expanded) {
    if (page_budget < 1) throw Error(errc::precondition, "page budget must be at least 1");
    if (order.size() != g.vertex_count())
        throw Error(errc::domain_mismatch, "spine order does not cover the graph");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!order.contains(v))
            throw Error(errc::domain_mismatch, "vertex " + std::to_string(v) + " missing from the spine");

    // Longest spans first: they conflict with the most edges and fail fast.
    std::vector<Edge> edges = g.edges();
    auto span = [&](const Edge& e) { return std::abs(order.position(e.u) - order.position(e.v)); };
    std::stable_sort(edges.begin(), edges.end(),
                     [&](const Edge& a, const Edge& b) { return span(a) > span(b); });

    const size_t m = edges.size();
    std::vector<std::vector<int>> conflicts(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < i; ++j) {
            bool adjacent = edges[i].touches(edges[j].u) || edges[i].touches(edges[j].v);
            if (adjacent || crosses(order, edges[i], edges[j]))
                conflicts[i].push_back(static_cast<int>(j));
        }
    }

    AssignmentSearch search(conflicts, page_budget);
    bool found = search.run(0, -1);
    if (nodes_expanded) *nodes_expanded += search.nodes;
    if (!found) return std::nullopt;

    BookEmbedding emb;
    emb.order = order;
    emb.pages = page_budget;
    for (size_t i = 0; i < m; ++i) emb.page_of[edges[i]] = search.assigned[i];
    return emb;
}

std::optional<OracleResult> exact_mbt(const Graph& g, int max_pages, bool allow_large) {
    const int n = g.vertex_count();
    if (n > kOrderSearchCap && !allow_large)
        throw Error(errc::cap_exceeded, "order search over " + std::to_string(n) +
                                            " vertices refused; pass allow_large to override");

    OracleResult result;
    if (g.edge_count() == 0) {
        std::vector<Vertex> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        result.mbt = 0;
        result.witness.order = SpineOrder(identity);
        result.witness.pages = 1;
        result.orders_tried = 1;
        return result;
    }

    long long orders = 0, nodes = 0;
    for (int k = std::max(1, g.max_degree()); k <= max_pages; ++k) {
        // Vertex 0 is pinned to the top (rotations are equivalent) and each
        // reflection class is tried once via sequence[1] < sequence[n-1].
        std::vector<Vertex> rest(n - 1);
        std::iota(rest.begin(), rest.end(), 1);
        do {
            if (n >= 3 && rest.front() > rest.back()) continue;
            std::vector<Vertex> seq;
            seq.reserve(n);
            seq.push_back(0);
            seq.insert(seq.end(), rest.begin(), rest.end());
            ++orders;
            auto witness = exact_mbt_fixed_order(g, SpineOrder(seq), k, &nodes);
            if (witness) {
                result.mbt = k;
                result.witness = *witness;
                result.orders_tried = orders;
                result.nodes_expanded = nodes;
                return result;
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return std::nullopt;
}

int chromatic_index(const Graph& g, bool allow_large) {
    const int m = g.edge_count();
    if (m > kColoringEdgeCap && !allow_large)
        throw Error(errc::cap_exceeded, "edge coloring over " + std::to_string(m) +
                                            " edges refused; pass allow_large to override");
    if (m == 0) return 0;

    const auto& edges = g.edges();
    std::vector<std::vector<int>> conflicts(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (edges[i].touches(edges[j].u) || edges[i].touches(edges[j].v))
                conflicts[i].push_back(j);

    // A proper coloring with max degree colors may not exist, but one more
    // always does for simple graphs.
    for (int k = g.max_degree(); k <= g.max_degree() + 1; ++k) {
        AssignmentSearch search(conflicts, k);
        if (search.run(0, -1)) return k;
    }
    throw Error(errc::internal, "edge coloring exceeded max degree + 1");
}

void enumerate_biconnected_outerplanar(int n, const std::function<void(const Graph&)>& yield) {
    if (n < 3 || n > 10)
        throw Error(errc::precondition, "enumeration supports 3 <= n <= 10");

    std::vector<Edge> cycle;
    for (int i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);

    std::vector<Edge> chords;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1)) chords.emplace_back(i, j);

    auto crossing = [](const Edge& a, const Edge& b) {
        return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
    };

    std::vector<Edge> chosen;
    auto emit = [&]() {
        std::vector<Edge> all = cycle;
        all.insert(all.end(), chosen.begin(), chosen.end());
        yield(Graph(n, all));
    };
    std::function<void(size_t)> recurse = [&](size_t start) {
        emit();
        for (size_t k = start; k < chords.size(); ++k) {
            bool ok = true;
            for (const Edge& c : chosen)
                if (crossing(c, chords[k])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(chords[k]);
            recurse(k + 1);
            chosen.pop_back();
        }
    };
    recurse(0);
}

std::vector<Graph> all_biconnected_outerplanar(int n) {
    std::vector<Graph> out;
    enumerate_biconnected_outerplanar(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace matchbook
