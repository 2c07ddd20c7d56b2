#include "matchbook/reduction.hpp"

#include <algorithm>
#include <set>

#include "matchbook/small_delta.hpp"

namespace matchbook {

Vertex choose_start(const Graph& g, const OuterplanarWitness& witness) {
    if (witness.cycle_order.size() != g.vertex_count())
        throw Error(errc::domain_mismatch, "witness does not belong to this graph");
    auto deg2 = g.degree2_vertices();
    if (deg2.empty())
        throw Error(errc::precondition, "no degree-2 vertex; graph is not biconnected outerplanar");
    return deg2.front();
}

ReducedGraph mark_matching(const Graph& g, const OuterplanarWitness& witness, Vertex v1) {
    if (v1 < 0 || v1 >= g.vertex_count() || g.degree(v1) != 2)
        throw Error(errc::start_not_degree2,
                    "marking must start at a degree-2 vertex, got " + std::to_string(v1));

    SpineOrder rooted = witness.cycle_order.rotated(witness.cycle_order.position(v1));
    const auto& seq = rooted.sequence();
    const int t = rooted.size();

    // Cycle edges in rooted order are e_i = (seq[i], seq[i+1]); marking every
    // second one starting after the first marks exactly the odd i, which also
    // covers the wrap edge iff t is even.
    ReducedGraph rg;
    for (int i = 1; i < t; i += 2) rg.matching.emplace_back(seq[i], seq[(i + 1) % t]);
    std::sort(rg.matching.begin(), rg.matching.end());

    std::vector<Edge> residual_edges;
    for (const Edge& e : g.edges())
        if (!std::binary_search(rg.matching.begin(), rg.matching.end(), e))
            residual_edges.push_back(e);
    rg.residual = Graph(g.vertex_count(), residual_edges);
    rg.start_vertex = v1;
    rg.order = witness.cycle_order;
    return rg;
}

BlockPlan plan_blocks(const ReducedGraph& rg) {
    BlockPlan plan;
    plan.decomposition = blocks(rg.residual);
    for (const Block& b : plan.decomposition.blocks) {
        plan.kinds.push_back(b.max_degree() <= 3 ? BlockKind::small_block : BlockKind::large_block);
        std::vector<Vertex> induced;
        for (Vertex v : rg.order.sequence())
            if (std::binary_search(b.vertices.begin(), b.vertices.end(), v)) induced.push_back(v);
        plan.induced_orders.emplace_back(std::move(induced));
    }
    return plan;
}

namespace {

// Certificate for one block on the block's own canonical cycle order, in the
// original vertex labels.
BookEmbedding embed_block_canonical(const Block& b) {
    if (b.edges.size() == 1) {
        BookEmbedding emb;
        emb.order = SpineOrder({b.edges.front().u, b.edges.front().v});
        emb.page_of[b.edges.front()] = 0;
        emb.pages = 1;
        return emb;
    }
    std::vector<Edge> dense_edges;
    auto dense = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) -
                                   b.vertices.begin());
    };
    for (const Edge& e : b.edges) dense_edges.emplace_back(dense(e.u), dense(e.v));
    Graph sub(static_cast<int>(b.vertices.size()), dense_edges);

    BookEmbedding inner = embed_outerplanar(sub);

    BookEmbedding emb;
    emb.pages = inner.pages;
    std::vector<Vertex> seq;
    for (Vertex v : inner.order.sequence()) seq.push_back(b.vertices[v]);
    emb.order = SpineOrder(seq);
    for (const auto& [e, page] : inner.page_of)
        emb.page_of[Edge(b.vertices[e.u], b.vertices[e.v])] = page;
    return emb;
}

}  // namespace

BookEmbedding embed_block(const Block& b, const SpineOrder& induced_order) {
    if (b.edges.empty()) throw Error(errc::precondition, "empty block");
    BookEmbedding emb = embed_block_canonical(b);
    return align_to(emb, induced_order);
}

namespace {

// Fold one block certificate into an accumulating assignment, permuting its
// pages so nothing collides at the attach vertex. Constrained pages go
// first-fit into the palette minus what the attach vertex already uses, the
// rest first-fit into whatever is left.
void fold_block_pages(const BookEmbedding& block_emb, Vertex attach, int palette,
                      std::map<Edge, int>& out_pages, std::vector<std::set<int>>& used_at) {
    std::set<int> present;
    std::set<int> at_attach;
    for (const auto& [e, page] : block_emb.page_of) {
        present.insert(page);
        if (attach >= 0 && e.touches(attach)) at_attach.insert(page);
    }

    const std::set<int> forbidden = attach >= 0 ? used_at[attach] : std::set<int>{};
    std::map<int, int> remap;
    std::set<int> taken;
    auto first_fit = [&](bool avoid_attach) {
        for (int q = 0; q < palette; ++q) {
            if (taken.count(q)) continue;
            if (avoid_attach && forbidden.count(q)) continue;
            taken.insert(q);
            return q;
        }
        throw Error(errc::page_collision, "page palette exhausted at a cut vertex");
    };
    for (int p : present)
        if (at_attach.count(p)) remap[p] = first_fit(true);
    for (int p : present)
        if (!at_attach.count(p)) remap[p] = first_fit(false);

    for (const auto& [e, page] : block_emb.page_of) {
        int q = remap.at(page);
        out_pages[e] = q;
        used_at[e.u].insert(q);
        used_at[e.v].insert(q);
    }
}

}  // namespace

BookEmbedding compose_blocks(const BlockPlan& plan, const std::vector<BookEmbedding>& block_embs,
                             const SpineOrder& global_order) {
    const auto& dec = plan.decomposition;
    if (block_embs.size() != dec.blocks.size())
        throw Error(errc::precondition, "one embedding per block required");

    int palette = 1;
    for (const auto& emb : block_embs) palette = std::max(palette, emb.pages);
    for (Vertex cut : dec.cut_vertices) {
        int deg = 0;
        for (int bi : dec.blocks_at(cut)) deg += dec.blocks[bi].degree_of(cut);
        palette = std::max(palette, deg);
    }

    BookEmbedding out;
    out.order = global_order;
    out.pages = palette;

    std::vector<std::set<int>> used_at(global_order.size());
    std::vector<bool> done(dec.blocks.size(), false);

    for (size_t root = 0; root < dec.blocks.size(); ++root) {
        if (done[root]) continue;
        // Depth-first over the block tree of this residual component.
        std::vector<std::pair<int, Vertex>> stack{{static_cast<int>(root), -1}};
        done[root] = true;
        while (!stack.empty()) {
            auto [bi, attach] = stack.back();
            stack.pop_back();
            fold_block_pages(block_embs[bi], attach, palette, out.page_of, used_at);
            std::vector<std::pair<int, Vertex>> next;
            for (Vertex v : dec.blocks[bi].vertices) {
                if (!dec.is_cut_vertex(v)) continue;
                for (int nb : dec.blocks_at(v)) {
                    if (!done[nb]) {
                        done[nb] = true;
                        next.emplace_back(nb, v);
                    }
                }
            }
            for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(*it);
        }
    }
    return out;
}

BookEmbedding embed_outerplanar(const Graph& g) {
    OuterplanarWitness witness = recognize_outerplanar(g);
    const int delta = g.max_degree();
    if (delta <= 2) return embed_cycle(g);  // biconnected with max degree 2
    if (delta == 3) return embed_delta3(g);

    Vertex v1 = choose_start(g, witness);
    ReducedGraph rg = mark_matching(g, witness, v1);
    BlockPlan plan = plan_blocks(rg);

    std::vector<BookEmbedding> block_embs;
    block_embs.reserve(plan.decomposition.blocks.size());
    for (size_t i = 0; i < plan.decomposition.blocks.size(); ++i)
        block_embs.push_back(embed_block(plan.decomposition.blocks[i], plan.induced_orders[i]));

    BookEmbedding composed = compose_blocks(plan, block_embs, rg.order);
    if (composed.pages != delta - 1)
        throw Error(errc::internal, "residual composition used " + std::to_string(composed.pages) +
                                        " pages, expected " + std::to_string(delta - 1));

    BookEmbedding out = composed;
    out.pages = delta;
    for (const Edge& e : rg.matching) out.page_of[e] = delta - 1;

    VerificationReport report = verify(g, out);
    if (!report.ok || report.pages_used != delta)
        throw Error(errc::internal, "constructed certificate failed self-verification");
    return out;
}

BookEmbedding embed_general(const Graph& g) {
    const int n = g.vertex_count();
    BookEmbedding out;
    if (n == 0) return out;

    BlockDecomposition dec = blocks(g);

    std::vector<BookEmbedding> block_certs;
    block_certs.reserve(dec.blocks.size());
    for (const Block& b : dec.blocks) {
        try {
            block_certs.push_back(embed_block_canonical(b));
        } catch (const Error& err) {
            if (err.code() == errc::not_outerplanar || err.code() == errc::not_biconnected)
                throw Error(errc::not_outerplanar, "a block of the graph is not outerplanar");
            throw;
        }
    }

    int palette = 1;
    for (const auto& cert : block_certs) palette = std::max(palette, cert.pages);
    for (Vertex cut : dec.cut_vertices) palette = std::max(palette, g.degree(cut));
    out.pages = palette;

    // Components in min-vertex order; inside each, depth-first over the block
    // tree. Each block contributes a contiguous spine interval spliced in
    // right after its attach vertex, so arcs of different blocks only nest.
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<Vertex> stack{s};
        comp[s] = comp_count;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }

    std::vector<Vertex> spine;
    std::vector<std::set<int>> used_at(n);
    std::vector<bool> done(dec.blocks.size(), false);

    for (int c = 0; c < comp_count; ++c) {
        int root = -1;
        for (size_t i = 0; i < dec.blocks.size(); ++i) {
            if (!done[i] && comp[dec.blocks[i].vertices.front()] == c) {
                root = static_cast<int>(i);
                break;
            }
        }
        if (root == -1) {
            // edgeless component: a single isolated vertex
            for (Vertex v = 0; v < n; ++v)
                if (comp[v] == c) spine.push_back(v);
            continue;
        }

        std::vector<std::pair<int, Vertex>> stack{{root, -1}};
        done[root] = true;
        while (!stack.empty()) {
            auto [bi, attach] = stack.back();
            stack.pop_back();

            BookEmbedding cert = block_certs[bi];
            if (attach >= 0) cert = rotate(cert, cert.order.position(attach));
            const auto& seq = cert.order.sequence();
            if (attach < 0) {
                spine.insert(spine.end(), seq.begin(), seq.end());
            } else {
                auto at = std::find(spine.begin(), spine.end(), attach);
                spine.insert(at + 1, seq.begin() + 1, seq.end());
            }
            fold_block_pages(cert, attach, palette, out.page_of, used_at);

            std::vector<std::pair<int, Vertex>> next;
            for (Vertex v : dec.blocks[bi].vertices) {
                if (!dec.is_cut_vertex(v)) continue;
                for (int nb : dec.blocks_at(v)) {
                    if (!done[nb]) {
                        done[nb] = true;
                        next.emplace_back(nb, v);
                    }
                }
            }
            for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(*it);
        }
    }

    out.order = SpineOrder(spine);
    VerificationReport report = verify(g, out);
    if (!report.ok) throw Error(errc::internal, "composed certificate failed self-verification");
    return out;
}

}  // namespace matchbook
