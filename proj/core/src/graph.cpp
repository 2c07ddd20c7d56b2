#include "matchbook/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stack>

namespace matchbook {

SpineOrder::SpineOrder(std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
    Vertex max_label = -1;
    for (Vertex v : seq_) {
        if (v < 0)
            throw Error(errc::domain_mismatch, "negative vertex label on the spine");
        max_label = std::max(max_label, v);
    }
    pos_.assign(static_cast<size_t>(max_label) + 1, -1);
    for (int i = 0; i < static_cast<int>(seq_.size()); ++i) {
        if (pos_[seq_[i]] != -1)
            throw Error(errc::domain_mismatch,
                        "vertex " + std::to_string(seq_[i]) + " appears twice on the spine");
        pos_[seq_[i]] = i;
    }
}

SpineOrder SpineOrder::rotated(int steps) const {
    int n = size();
    if (n == 0) return *this;
    int s = ((steps % n) + n) % n;
    std::vector<Vertex> out(seq_.size());
    for (int i = 0; i < n; ++i) out[i] = seq_[(i + s) % n];
    return SpineOrder(std::move(out));
}

SpineOrder SpineOrder::reversed() const {
    std::vector<Vertex> out(seq_.rbegin(), seq_.rend());
    return SpineOrder(std::move(out));
}

void Graph::init(int n, const std::vector<Edge>& edge_list) {
    if (n < 0) throw Error(errc::invalid_graph, "negative vertex count");
    n_ = n;
    adj_.assign(n, {});
    edges_ = edge_list;
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.v >= n_)
            throw Error(errc::invalid_graph, "edge (" + std::to_string(e.u) + "," +
                                                 std::to_string(e.v) + ") endpoint out of range");
        if (e.u == e.v)
            throw Error(errc::invalid_graph, "self-loop at vertex " + std::to_string(e.u));
        if (i > 0 && edges_[i - 1] == e)
            throw Error(errc::invalid_graph, "duplicate edge (" + std::to_string(e.u) + "," +
                                                 std::to_string(e.v) + ")");
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Graph::Graph(int n, const std::vector<Edge>& edge_list) { init(n, edge_list); }

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a == b) throw Error(errc::invalid_graph, "self-loop at vertex " + std::to_string(a));
        edges.emplace_back(a, b);
    }
    init(n, edges);
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
    return Graph(n, edge_list);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    const auto& nbrs = adj_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

std::vector<Vertex> Graph::degree2_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        if (degree(v) == 2) out.push_back(v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<bool> seen(n_, false);
    std::stack<Vertex> todo;
    todo.push(0);
    seen[0] = true;
    int reached = 1;
    while (!todo.empty()) {
        Vertex v = todo.top();
        todo.pop();
        for (Vertex w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                todo.push(w);
            }
        }
    }
    return reached == n_;
}

int Block::max_degree() const {
    int best = 0;
    for (Vertex v : vertices) best = std::max(best, degree_of(v));
    return best;
}

int Block::degree_of(Vertex v) const {
    int d = 0;
    for (const Edge& e : edges)
        if (e.touches(v)) ++d;
    return d;
}

bool BlockDecomposition::is_cut_vertex(Vertex v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockDecomposition::blocks_at(Vertex cut) const {
    std::vector<int> out;
    for (const auto& [b, v] : block_tree)
        if (v == cut) out.push_back(b);
    return out;
}

namespace {

// Iterative lowpoint DFS. Emits one block per popped edge group and collects
// articulation vertices.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent, next_child;
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> raw_blocks;
    std::vector<bool> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0),
          parent(graph.vertex_count(), -1),
          next_child(graph.vertex_count(), 0),
          is_cut(graph.vertex_count(), false) {}

    void pop_block(Edge until) {
        std::vector<Edge> block;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until) break;
        }
        raw_blocks.push_back(std::move(block));
    }

    void run_from(Vertex root) {
        std::vector<Vertex> call_stack{root};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!call_stack.empty()) {
            Vertex v = call_stack.back();
            const auto& nbrs = g.neighbors(v);
            if (next_child[v] < static_cast<int>(nbrs.size())) {
                Vertex w = nbrs[next_child[v]++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    if (v == root) ++root_children;
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    call_stack.push_back(w);
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                call_stack.pop_back();
                if (!call_stack.empty()) {
                    Vertex p = call_stack.back();
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != root) is_cut[p] = true;
                        pop_block(Edge(p, v));
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = true;
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder finder(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (finder.disc[v] == -1 && g.degree(v) > 0) finder.run_from(v);

    BlockDecomposition out;
    for (auto& raw : finder.raw_blocks) {
        Block b;
        b.edges = std::move(raw);
        std::sort(b.edges.begin(), b.edges.end());
        std::set<Vertex> vs;
        for (const Edge& e : b.edges) {
            vs.insert(e.u);
            vs.insert(e.v);
        }
        b.vertices.assign(vs.begin(), vs.end());
        out.blocks.push_back(std::move(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (finder.is_cut[v]) out.cut_vertices.push_back(v);
    for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i)
        for (Vertex v : out.blocks[i].vertices)
            if (out.is_cut_vertex(v)) out.block_tree.emplace_back(i, v);
    return out;
}

bool is_biconnected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!g.is_connected()) return false;
    return blocks(g).cut_vertices.empty();
}

namespace {

// Insert v between cyclically adjacent a and b; throws if they are not
// adjacent on the current cycle (the reinsertion invariant of the peeling).
void insert_between(std::vector<Vertex>& cycle, Vertex v, Vertex a, Vertex b) {
    int n = static_cast<int>(cycle.size());
    for (int i = 0; i < n; ++i) {
        Vertex p = cycle[i];
        Vertex q = cycle[(i + 1) % n];
        if ((p == a && q == b) || (p == b && q == a)) {
            cycle.insert(cycle.begin() + i + 1, v);
            return;
        }
    }
    throw Error(errc::not_outerplanar, "peeled vertex " + std::to_string(v) +
                                           " cannot rejoin the cycle between " + std::to_string(a) +
                                           " and " + std::to_string(b));
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
    int n = static_cast<int>(cycle.size());
    int start = static_cast<int>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::rotate(cycle.begin(), cycle.begin() + start, cycle.end());
    if (n >= 3 && cycle[n - 1] < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

}  // namespace

OuterplanarWitness recognize_outerplanar(const Graph& g) {
    if (!is_biconnected(g)) throw Error(errc::not_biconnected, "graph is not biconnected");
    const int n = g.vertex_count();

    std::vector<std::set<Vertex>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }

    struct Peel {
        Vertex v, a, b;
    };
    std::vector<Peel> peels;
    std::vector<bool> active(n, true);
    int remaining = n;

    while (remaining > 3) {
        Vertex v = -1;
        for (Vertex cand = 0; cand < n; ++cand) {
            if (active[cand] && adj[cand].size() == 2) {
                v = cand;
                break;
            }
        }
        if (v == -1)
            throw Error(errc::not_outerplanar, "no degree-2 vertex left to peel");
        auto it = adj[v].begin();
        Vertex a = *it++;
        Vertex b = *it;
        adj[a].erase(v);
        adj[b].erase(v);
        active[v] = false;
        --remaining;
        // a-b may already exist as a chord; then it simply becomes the cycle
        // edge of the smaller graph and nothing is added.
        adj[a].insert(b);
        adj[b].insert(a);
        peels.push_back({v, a, b});
    }

    std::vector<Vertex> base;
    for (Vertex v = 0; v < n; ++v)
        if (active[v]) base.push_back(v);
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i + 1; j < base.size(); ++j)
            if (!adj[base[i]].count(base[j]))
                throw Error(errc::not_outerplanar, "peeling did not end in a triangle");

    std::vector<Vertex> cycle = base;
    for (auto it = peels.rbegin(); it != peels.rend(); ++it)
        insert_between(cycle, it->v, it->a, it->b);
    cycle = canonical_cycle(cycle);

    // Validate against the original graph: every consecutive pair must be a
    // real edge (virtual edges from peeling must not leak into the cycle),
    // and the chord set must be pairwise noncrossing.
    SpineOrder order{cycle};
    for (int i = 0; i < n; ++i) {
        Vertex p = cycle[i];
        Vertex q = cycle[(i + 1) % n];
        if (!g.has_edge(p, q))
            throw Error(errc::not_outerplanar, "reconstructed cycle uses the non-edge (" +
                                                   std::to_string(p) + "," + std::to_string(q) + ")");
    }

    OuterplanarWitness witness;
    for (const Edge& e : g.edges()) {
        int pu = order.position(e.u);
        int pv = order.position(e.v);
        int gap = std::abs(pu - pv);
        if (gap != 1 && gap != n - 1) witness.chords.push_back(e);
    }
    for (size_t i = 0; i < witness.chords.size(); ++i) {
        for (size_t j = i + 1; j < witness.chords.size(); ++j) {
            const Edge& e1 = witness.chords[i];
            const Edge& e2 = witness.chords[j];
            int a1 = std::min(order.position(e1.u), order.position(e1.v));
            int b1 = std::max(order.position(e1.u), order.position(e1.v));
            int a2 = std::min(order.position(e2.u), order.position(e2.v));
            int b2 = std::max(order.position(e2.u), order.position(e2.v));
            bool cross = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
            if (cross)
                throw Error(errc::not_outerplanar, "chords cross on the reconstructed cycle");
        }
    }
    witness.cycle_order = std::move(order);
    return witness;
}

}  // namespace matchbook
