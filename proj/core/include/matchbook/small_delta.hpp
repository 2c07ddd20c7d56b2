#pragma once

#include "matchbook/embedding.hpp"
#include "matchbook/graph.hpp"

namespace matchbook {

// One contraction of the max-degree-3 construction. Either an adjacent
// degree-2 pair u,v collapses to one vertex, or a triangle x,y,z with
// degree-2 apex z collapses. vertex_map translates contracted-graph labels
// back to original labels; the contracted vertex stands in for the removed
// set and maps to its smallest member.
struct ReductionStep {
    enum class Kind { pair_contraction, triangle_contraction };

    Kind kind = Kind::pair_contraction;

    // pair contraction: uv in E, d(u)=d(v)=2, au in E, bv in E, a != b
    Vertex u = -1, v = -1, a = -1, b = -1;

    // triangle contraction: xy,yz,xz in E, d(z)=2, d(x)=d(y)=3,
    // cx in E, dy in E, c != d
    Vertex x = -1, y = -1, z = -1, c = -1, d = -1;

    Vertex contracted_vertex = -1;   // label in the contracted graph
    std::vector<Vertex> vertex_map;  // contracted label -> original label
};

// Cycle certificate: spine = cycle order; even length alternates two pages,
// odd length alternates two pages with the closing edge on a third.
BookEmbedding embed_cycle(const Graph& g);

// Find a contraction site in a biconnected outerplanar graph with max degree
// 3 and at least 5 cycle edges. Scans degree-2 vertices in label order and
// prefers the pair contraction when both kinds exist.
ReductionStep find_reduction(const Graph& g, const OuterplanarWitness& witness);

// Apply the contraction, producing a dense-labeled smaller graph. Surviving
// vertices keep their relative label order; the contracted vertex takes the
// slot of the smallest removed label.
Graph contract_step(const Graph& g, const ReductionStep& step);

// Undo a contraction on an embedding of the contracted graph: split the
// contracted vertex on the spine and recolor the handful of new edges inside
// the 3-page palette. The result is an embedding of the original graph.
BookEmbedding split_and_color(const BookEmbedding& contracted_emb, const ReductionStep& step);

// Certificate for a biconnected outerplanar graph with max degree exactly 3:
// 3 pages, spine = hamiltonian cycle order. Recursion on contractions with
// the 4-vertex graph (quadrilateral plus one chord) as base case.
BookEmbedding embed_delta3(const Graph& g);

}  // namespace matchbook
