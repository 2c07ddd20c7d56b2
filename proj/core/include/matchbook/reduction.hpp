#pragma once

#include "matchbook/embedding.hpp"
#include "matchbook/graph.hpp"

namespace matchbook {

// Alternate-edge matching along the hamiltonian cycle and the residual graph
// left after removing it. `order` is the canonical global spine the rest of
// the pipeline embeds against.
struct ReducedGraph {
    std::vector<Edge> matching;  // sorted; pairwise non-adjacent cycle edges
    Graph residual;              // same vertex set, edges minus the matching
    Vertex start_vertex = -1;    // the degree-2 vertex the marking starts at
    SpineOrder order;            // canonical hamiltonian cycle order of g
};

enum class BlockKind {
    small_block,  // max degree <= 3
    large_block,  // max degree >= 4
};

struct BlockPlan {
    BlockDecomposition decomposition;        // blocks of the residual
    std::vector<BlockKind> kinds;            // parallel to decomposition.blocks
    std::vector<SpineOrder> induced_orders;  // global order restricted per block
};

// Lowest-labeled degree-2 vertex (one always exists in a biconnected
// outerplanar graph).
Vertex choose_start(const Graph& g, const OuterplanarWitness& witness);

// Mark every second hamiltonian-cycle edge starting one past v1: with the
// cycle rooted at v1 as v1..vt, the marked set is {(v2,v3),(v4,v5),...};
// (v1,v2) stays unmarked and (vt,v1) is marked iff t is even. The marks form
// a maximum matching of the cycle.
ReducedGraph mark_matching(const Graph& g, const OuterplanarWitness& witness, Vertex v1);

// Decompose the residual into blocks, tag each by max degree, and restrict
// the global spine order to each block's vertex set.
BlockPlan plan_blocks(const ReducedGraph& rg);

// Certificate for one block, expressed on the given induced order. Single
// edges take one page; cycles and biconnected blocks dispatch to the cycle /
// max-degree-3 / general constructions, then the block's own cycle order is
// aligned with induced_order by rotation/reflection (order_mismatch if the
// induced order is not such an alignment).
BookEmbedding embed_block(const Block& b, const SpineOrder& induced_order);

// Merge block certificates onto the global spine. Blocks are folded in
// block-tree order; at the shared cut vertex the incoming block's pages are
// permuted first-fit so no two edges at that vertex collide. The palette has
// max(block pages, cut-vertex residual degree) pages, which the counting
// argument makes sufficient (page_collision otherwise).
BookEmbedding compose_blocks(const BlockPlan& plan,
                             const std::vector<BookEmbedding>& block_embs,
                             const SpineOrder& global_order);

// Certificate for a biconnected outerplanar graph on max(Delta, chi') pages:
// Delta pages unless the graph is an odd cycle, which takes 3. For Delta >= 4
// the alternate-edge matching is stripped, the residual is embedded per block
// on Delta-1 pages, and the matching lands on the final page.
BookEmbedding embed_outerplanar(const Graph& g);

// Certificate for any graph whose blocks are all outerplanar: embeds each
// block, concatenates block intervals along the spine sharing cut vertices,
// and recolors page-collisions at the junctions. Page count is
// max(block pages, max cut-vertex degree).
BookEmbedding embed_general(const Graph& g);

}  // namespace matchbook
