#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "matchbook/errors.hpp"
#include "matchbook/spine_order.hpp"

namespace matchbook {

// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = -1;
    Vertex v = -1;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool touches(Vertex w) const { return u == w || v == w; }
    Vertex other(Vertex w) const { return u == w ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on dense vertex labels 0..n-1. Construction
// validates the edge list; instances are immutable afterwards.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);
    Graph(int n, const std::vector<Edge>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex a, Vertex b) const;

    // Largest vertex degree; 0 for edgeless graphs.
    int max_degree() const;

    // Vertices of degree exactly 2, ascending.
    std::vector<Vertex> degree2_vertices() const;

    bool is_connected() const;

private:
    void init(int n, const std::vector<Edge>& edge_list);

    int n_ = 0;
    std::vector<Edge> edges_;               // sorted
    std::vector<std::vector<Vertex>> adj_;  // sorted per vertex
};

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

// One block: a bridge edge or a maximal biconnected subgraph, kept in the
// original vertex labels.
struct Block {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Edge> edges;       // sorted

    int max_degree() const;
    int degree_of(Vertex v) const;
};

struct BlockDecomposition {
    std::vector<Block> blocks;                      // sorted by vertex list
    std::vector<Vertex> cut_vertices;               // sorted
    std::vector<std::pair<int, Vertex>> block_tree; // (block index, cut vertex) incidences

    bool is_cut_vertex(Vertex v) const;
    std::vector<int> blocks_at(Vertex cut) const;
};

// Biconnected-component decomposition. Disconnected inputs are decomposed
// per component and the union is returned. Isolated vertices contribute no
// block.
BlockDecomposition blocks(const Graph& g);

// Connected, at least 3 vertices, and no cut vertex. A single edge (K2) is
// not biconnected under this definition.
bool is_biconnected(const Graph& g);

// The unique hamiltonian cycle of a biconnected outerplanar graph plus its
// chord set. cycle_order is canonical: starts at the smallest label and runs
// toward the smaller of its two cycle neighbors.
struct OuterplanarWitness {
    SpineOrder cycle_order;
    std::vector<Edge> chords;  // sorted
};

// Recognize a biconnected outerplanar graph by repeatedly peeling the
// lowest-labeled degree-2 vertex, then reinserting in reverse to rebuild the
// cycle. Throws not_biconnected / not_outerplanar.
OuterplanarWitness recognize_outerplanar(const Graph& g);

}  // namespace matchbook
