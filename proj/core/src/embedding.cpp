#include "matchbook/embedding.hpp"

#include <algorithm>
#include <set>

namespace matchbook {

int BookEmbedding::pages_used() const {
    std::set<int> used;
    for (const auto& [e, p] : page_of) used.insert(p);
    return static_cast<int>(used.size());
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::unassigned_edge: return "unassigned-edge";
        case ViolationKind::page_out_of_range: return "page-out-of-range";
        case ViolationKind::matching: return "matching";
        case ViolationKind::crossing: return "crossing";
    }
    return "?";
}

bool crosses(const SpineOrder& order, Edge e1, Edge e2) {
    if (e1 == e2) return false;
    int a = order.position(e1.u), b = order.position(e1.v);
    if (a > b) std::swap(a, b);
    int c = order.position(e2.u), d = order.position(e2.v);
    if (c > d) std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

VerificationReport verify(const Graph& g, const BookEmbedding& emb) {
    const int n = g.vertex_count();
    if (emb.order.size() != n)
        throw Error(errc::domain_mismatch, "spine covers " + std::to_string(emb.order.size()) +
                                               " vertices, graph has " + std::to_string(n));
    for (Vertex v = 0; v < n; ++v)
        if (!emb.order.contains(v))
            throw Error(errc::domain_mismatch, "vertex " + std::to_string(v) + " missing from the spine");
    for (const auto& [e, page] : emb.page_of) {
        (void)page;
        if (!g.has_edge(e.u, e.v))
            throw Error(errc::domain_mismatch, "assignment mentions non-edge (" +
                                                   std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }

    VerificationReport report;
    report.delta = g.max_degree();

    for (const Edge& e : g.edges())
        if (!emb.page_of.count(e))
            report.violations.push_back({ViolationKind::unassigned_edge, -1, {e}});

    for (const auto& [e, page] : emb.page_of)
        if (page < 0 || page >= emb.pages)
            report.violations.push_back({ViolationKind::page_out_of_range, -1, {e}});

    // Group the assignment by page; the map is edge-sorted, so every list and
    // hence every violation comes out in a deterministic order.
    std::map<int, std::vector<Edge>> by_page;
    for (const auto& [e, page] : emb.page_of) by_page[page].push_back(e);
    report.pages_used = static_cast<int>(by_page.size());

    for (const auto& [page, edges] : by_page) {
        (void)page;
        std::map<Vertex, std::vector<Edge>> at_vertex;
        for (const Edge& e : edges) {
            at_vertex[e.u].push_back(e);
            at_vertex[e.v].push_back(e);
        }
        for (const auto& [v, incident] : at_vertex)
            if (incident.size() >= 2)
                report.violations.push_back({ViolationKind::matching, v, incident});
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j)
                if (crosses(emb.order, edges[i], edges[j]))
                    report.violations.push_back(
                        {ViolationKind::crossing, -1, {edges[i], edges[j]}});
    }

    report.ok = report.violations.empty();
    report.dispersable = report.pages_used == report.delta;
    return report;
}

int page_lower_bound(const Graph& g) { return g.max_degree(); }

namespace {

// Same-page validity re-check used by rotate(). Matching is order
// independent, so only crossings need a second look.
bool same_page_noncrossing(const BookEmbedding& emb) {
    std::map<int, std::vector<Edge>> by_page;
    for (const auto& [e, page] : emb.page_of) by_page[page].push_back(e);
    for (const auto& [page, edges] : by_page) {
        (void)page;
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j)
                if (crosses(emb.order, edges[i], edges[j])) return false;
    }
    return true;
}

}  // namespace

BookEmbedding rotate(const BookEmbedding& emb, int steps) {
    BookEmbedding out = emb;
    out.order = emb.order.rotated(steps);
    if (!same_page_noncrossing(out))
        throw Error(errc::rotation_invalid, "rotation broke a page of the embedding");
    return out;
}

BookEmbedding reflect(const BookEmbedding& emb) {
    BookEmbedding out = emb;
    out.order = emb.order.reversed();
    return out;
}

BookEmbedding align_to(const BookEmbedding& emb, const SpineOrder& target) {
    if (target.size() != emb.order.size())
        throw Error(errc::order_mismatch, "target order has a different vertex count");
    if (emb.order.size() == 0) return emb;
    Vertex head = target.sequence().front();
    if (emb.order.contains(head)) {
        BookEmbedding cand = rotate(emb, emb.order.position(head));
        if (cand.order == target) return cand;
        BookEmbedding mirrored = reflect(emb);
        cand = rotate(mirrored, mirrored.order.position(head));
        if (cand.order == target) return cand;
    }
    throw Error(errc::order_mismatch,
                "target order is not a rotation or reflection of the embedding's cycle");
}

long long total_crossing_pairs(const BookEmbedding& emb) {
    std::vector<Edge> edges;
    edges.reserve(emb.page_of.size());
    for (const auto& [e, page] : emb.page_of) {
        (void)page;
        edges.push_back(e);
    }
    long long count = 0;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (crosses(emb.order, edges[i], edges[j])) ++count;
    return count;
}

}  // namespace matchbook
