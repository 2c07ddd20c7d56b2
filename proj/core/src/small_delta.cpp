#include "matchbook/small_delta.hpp"

#include <algorithm>

namespace matchbook {

BookEmbedding embed_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || !g.is_connected())
        throw Error(errc::not_a_cycle, "graph is not a cycle");
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 2) throw Error(errc::not_a_cycle, "graph is not a cycle");

    // Walk from 0 toward its smaller neighbor: the canonical cycle order.
    std::vector<Vertex> cyc;
    cyc.reserve(n);
    cyc.push_back(0);
    Vertex prev = 0;
    Vertex cur = g.neighbors(0)[0];
    while (cur != 0) {
        cyc.push_back(cur);
        const auto& nbrs = g.neighbors(cur);
        Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
    }

    BookEmbedding emb;
    emb.order = SpineOrder(cyc);
    emb.pages = (n % 2 == 0) ? 2 : 3;
    for (int i = 0; i < n; ++i) {
        Edge e(cyc[i], cyc[(i + 1) % n]);
        // Walking edges alternate two pages; with odd length the closing edge
        // would clash with both its neighbors and goes to a third page.
        int page = (i == n - 1 && n % 2 == 1) ? 2 : i % 2;
        emb.page_of[e] = page;
    }
    return emb;
}

namespace {

Vertex other_neighbor(const Graph& g, Vertex v, Vertex excluded) {
    for (Vertex w : g.neighbors(v))
        if (w != excluded) return w;
    return -1;
}

// Dense relabeling after deleting `removed`: survivors keep their relative
// order and the replacement vertex takes the slot of the smallest removed
// label. Fills contracted_vertex and vertex_map.
void fill_contraction_labels(const Graph& g, const std::vector<Vertex>& removed,
                             ReductionStep& step) {
    Vertex rep = *std::min_element(removed.begin(), removed.end());
    step.vertex_map.clear();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        bool gone = std::find(removed.begin(), removed.end(), v) != removed.end();
        if (v == rep || !gone) step.vertex_map.push_back(v);
    }
    step.contracted_vertex =
        static_cast<Vertex>(std::lower_bound(step.vertex_map.begin(), step.vertex_map.end(), rep) -
                            step.vertex_map.begin());
}

}  // namespace

ReductionStep find_reduction(const Graph& g, const OuterplanarWitness& witness) {
    if (g.max_degree() != 3)
        throw Error(errc::precondition, "reduction search expects max degree 3");
    if (witness.cycle_order.size() < 5)
        throw Error(errc::precondition, "graph is at or below the 4-cycle-edge base case");

    // Adjacent degree-2 pair first: scan degree-2 vertices in label order and
    // take the lowest-labeled degree-2 neighbor as the partner.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        for (Vertex u : g.neighbors(v)) {
            if (g.degree(u) != 2) continue;
            ReductionStep step;
            step.kind = ReductionStep::Kind::pair_contraction;
            step.u = u;
            step.v = v;
            step.a = other_neighbor(g, u, v);
            step.b = other_neighbor(g, v, u);
            if (step.a == step.b)
                throw Error(errc::internal,
                            "degree-2 pair with a common outer neighbor in a biconnected graph");
            fill_contraction_labels(g, {step.u, step.v}, step);
            return step;
        }
    }

    // Otherwise a degree-2 apex whose two neighbors are adjacent degree-3
    // vertices.
    for (Vertex z = 0; z < g.vertex_count(); ++z) {
        if (g.degree(z) != 2) continue;
        Vertex x = g.neighbors(z)[0];
        Vertex y = g.neighbors(z)[1];
        if (!g.has_edge(x, y) || g.degree(x) != 3 || g.degree(y) != 3) continue;
        ReductionStep step;
        step.kind = ReductionStep::Kind::triangle_contraction;
        step.x = x;
        step.y = y;
        step.z = z;
        for (Vertex w : g.neighbors(x))
            if (w != y && w != z) step.c = w;
        for (Vertex w : g.neighbors(y))
            if (w != x && w != z) step.d = w;
        if (step.c == step.d)
            throw Error(errc::internal,
                        "triangle with a common outer neighbor in a biconnected graph");
        fill_contraction_labels(g, {step.x, step.y, step.z}, step);
        return step;
    }

    throw Error(errc::no_reduction, "no contraction site found; precondition violated");
}

namespace {

void check_pair_step(const Graph& g, const ReductionStep& s) {
    bool ok = g.has_edge(s.u, s.v) && g.degree(s.u) == 2 && g.degree(s.v) == 2 &&
              g.has_edge(s.a, s.u) && g.has_edge(s.b, s.v) && s.a != s.b && s.a != s.v &&
              s.b != s.u;
    if (!ok) throw Error(errc::invalid_step, "pair contraction does not match the graph");
}

void check_triangle_step(const Graph& g, const ReductionStep& s) {
    bool ok = g.has_edge(s.x, s.y) && g.has_edge(s.y, s.z) && g.has_edge(s.x, s.z) &&
              g.degree(s.z) == 2 && g.degree(s.x) == 3 && g.degree(s.y) == 3 &&
              g.has_edge(s.c, s.x) && g.has_edge(s.d, s.y) && s.c != s.d;
    ok = ok && s.c != s.y && s.c != s.z && s.d != s.x && s.d != s.z;
    if (!ok) throw Error(errc::invalid_step, "triangle contraction does not match the graph");
}

}  // namespace

Graph contract_step(const Graph& g, const ReductionStep& step) {
    std::vector<Vertex> removed;
    if (step.kind == ReductionStep::Kind::pair_contraction) {
        check_pair_step(g, step);
        removed = {step.u, step.v};
    } else {
        check_triangle_step(g, step);
        removed = {step.x, step.y, step.z};
    }

    ReductionStep labels = step;
    fill_contraction_labels(g, removed, labels);
    if (!step.vertex_map.empty() &&
        (step.vertex_map != labels.vertex_map || step.contracted_vertex != labels.contracted_vertex))
        throw Error(errc::invalid_step, "step labels disagree with the contraction");

    std::vector<int> new_id(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(labels.vertex_map.size()); ++i)
        new_id[labels.vertex_map[i]] = i;
    const Vertex w = labels.contracted_vertex;

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        bool ur = std::find(removed.begin(), removed.end(), e.u) != removed.end();
        bool vr = std::find(removed.begin(), removed.end(), e.v) != removed.end();
        if (!ur && !vr) edges.emplace_back(new_id[e.u], new_id[e.v]);
    }
    if (step.kind == ReductionStep::Kind::pair_contraction) {
        edges.emplace_back(w, new_id[step.a]);
        edges.emplace_back(w, new_id[step.b]);
    } else {
        edges.emplace_back(w, new_id[step.c]);
        edges.emplace_back(w, new_id[step.d]);
    }
    return Graph(static_cast<int>(labels.vertex_map.size()), edges);
}

BookEmbedding split_and_color(const BookEmbedding& contracted_emb, const ReductionStep& step) {
    const auto& map = step.vertex_map;  // contracted label -> original label
    const int ns = contracted_emb.order.size();
    if (static_cast<int>(map.size()) != ns || step.contracted_vertex < 0 ||
        step.contracted_vertex >= ns)
        throw Error(errc::invalid_step, "step labels do not fit the contracted embedding");
    if (contracted_emb.pages > 3)
        throw Error(errc::no_free_page, "contracted embedding uses more than 3 pages");

    const Vertex w = step.contracted_vertex;
    auto small_of = [&](Vertex original) -> Vertex {
        for (int s = 0; s < ns; ++s)
            if (map[s] == original && s != w) return s;
        throw Error(errc::invalid_step,
                    "vertex " + std::to_string(original) + " absent from the contracted graph");
    };

    const auto& seq = contracted_emb.order.sequence();
    const int pw = contracted_emb.order.position(w);
    const Vertex cyclic_left = seq[(pw + ns - 1) % ns];

    auto page_at_w = [&](Vertex nbr) {
        auto it = contracted_emb.page_of.find(Edge(w, nbr));
        if (it == contracted_emb.page_of.end())
            throw Error(errc::invalid_step, "contracted vertex lacks the expected edge");
        if (it->second < 0 || it->second > 2)
            throw Error(errc::no_free_page, "contracted edge is outside the 3-page palette");
        return it->second;
    };

    // New spine slot contents and the handful of recolored edges.
    std::vector<Vertex> slot;
    std::vector<std::pair<Edge, int>> new_edges;

    if (step.kind == ReductionStep::Kind::pair_contraction) {
        Vertex a_s = small_of(step.a);
        Vertex b_s = small_of(step.b);
        int p_au = page_at_w(a_s);
        int p_bv = page_at_w(b_s);
        if (p_au == p_bv)
            throw Error(errc::no_free_page, "both contracted edges share a page");
        int free_page = 3 - p_au - p_bv;
        // u sits on a's side so both replacement arcs stay short.
        slot = (cyclic_left == a_s) ? std::vector<Vertex>{step.u, step.v}
                                    : std::vector<Vertex>{step.v, step.u};
        new_edges = {{Edge(step.a, step.u), p_au},
                     {Edge(step.b, step.v), p_bv},
                     {Edge(step.u, step.v), free_page}};
    } else {
        Vertex c_s = small_of(step.c);
        Vertex d_s = small_of(step.d);
        int p_cx = page_at_w(c_s);
        int p_dy = page_at_w(d_s);
        if (p_cx == p_dy)
            throw Error(errc::no_free_page, "both contracted edges share a page");
        int third = 3 - p_cx - p_dy;
        slot = (cyclic_left == c_s) ? std::vector<Vertex>{step.x, step.z, step.y}
                                    : std::vector<Vertex>{step.y, step.z, step.x};
        // The two spine-adjacent triangle edges reuse the pages freed at the
        // opposite corner; the long triangle edge takes the remaining page.
        new_edges = {{Edge(step.c, step.x), p_cx},
                     {Edge(step.d, step.y), p_dy},
                     {Edge(step.y, step.z), p_cx},
                     {Edge(step.x, step.z), p_dy},
                     {Edge(step.x, step.y), third}};
    }

    BookEmbedding out;
    out.pages = 3;
    std::vector<Vertex> spine;
    spine.reserve(ns + static_cast<int>(slot.size()) - 1);
    for (Vertex s : seq) {
        if (s == w)
            spine.insert(spine.end(), slot.begin(), slot.end());
        else
            spine.push_back(map[s]);
    }
    out.order = SpineOrder(spine);

    int w_degree = 0;
    for (const auto& [e, page] : contracted_emb.page_of) {
        if (e.touches(w)) {
            ++w_degree;
            continue;
        }
        out.page_of[Edge(map[e.u], map[e.v])] = page;
    }
    if (w_degree != 2)
        throw Error(errc::invalid_step, "contracted vertex must have degree 2");
    for (const auto& [e, page] : new_edges) out.page_of[e] = page;
    return out;
}

namespace {

// 4-vertex base case: the quadrilateral with one chord. Cycle edges alternate
// two pages around the witness cycle, the chord takes the third.
BookEmbedding diamond_base(const Graph& g, const OuterplanarWitness& witness) {
    if (g.vertex_count() != 4 || g.edge_count() != 5 || witness.chords.size() != 1)
        throw Error(errc::precondition, "base case expects the 4-vertex chorded quadrilateral");
    const auto& seq = witness.cycle_order.sequence();
    BookEmbedding emb;
    emb.order = witness.cycle_order;
    emb.pages = 3;
    for (int i = 0; i < 4; ++i) emb.page_of[Edge(seq[i], seq[(i + 1) % 4])] = i % 2;
    emb.page_of[witness.chords.front()] = 2;
    return emb;
}

BookEmbedding embed_delta3_impl(const Graph& g, const OuterplanarWitness& witness) {
    if (g.vertex_count() == 4) return diamond_base(g, witness);
    ReductionStep step = find_reduction(g, witness);
    Graph contracted = contract_step(g, step);
    BookEmbedding inner = contracted.max_degree() <= 2
                              ? embed_cycle(contracted)
                              : embed_delta3_impl(contracted, recognize_outerplanar(contracted));
    return split_and_color(inner, step);
}

}  // namespace

BookEmbedding embed_delta3(const Graph& g) {
    OuterplanarWitness witness = recognize_outerplanar(g);
    if (g.max_degree() != 3)
        throw Error(errc::precondition, "embed_delta3 expects max degree exactly 3");
    BookEmbedding emb = embed_delta3_impl(g, witness);
    return align_to(emb, witness.cycle_order);
}

}  // namespace matchbook
