#pragma once

#include <map>
#include <vector>

#include "matchbook/graph.hpp"

namespace matchbook {

// A (candidate) matching book embedding: spine order plus edge -> page.
// This is the certificate object; validity is established by verify().
struct BookEmbedding {
    SpineOrder order;
    std::map<Edge, int> page_of;
    int pages = 1;

    // Number of distinct pages that carry at least one edge.
    int pages_used() const;
};

enum class ViolationKind {
    unassigned_edge,    // graph edge missing from page_of
    page_out_of_range,  // page index outside [0, pages)
    matching,           // vertex meets two edges on one page
    crossing,           // two same-page edges interleave on the spine
};

struct Violation {
    ViolationKind kind;
    Vertex vertex = -1;       // the clashing vertex for matching violations
    std::vector<Edge> edges;  // witness edges
};

struct VerificationReport {
    bool ok = false;
    std::vector<Violation> violations;
    int pages_used = 0;
    int delta = 0;
    bool dispersable = false;  // pages_used == delta
};

const char* to_string(ViolationKind kind);

// True iff the endpoint positions strictly interleave. Edges sharing an
// endpoint never cross.
bool crosses(const SpineOrder& order, Edge e1, Edge e2);

// Check a certificate against a graph: completeness of the assignment, page
// range, one edge per vertex per page, and no same-page crossing. Throws
// domain_mismatch when the certificate talks about a different vertex or
// edge set than g.
VerificationReport verify(const Graph& g, const BookEmbedding& emb);

// Pages can never go below the maximum degree (each page holds at most one
// edge per vertex), so Delta(G) is a universal lower bound.
int page_lower_bound(const Graph& g);

// Cyclic shift of the printing cycle, keeping the page assignment. Same-page
// validity is re-checked; misuse outside noncrossing layouts fails loudly
// with rotation_invalid rather than silently re-deriving pages.
BookEmbedding rotate(const BookEmbedding& emb, int steps);

// Reversal of the printing cycle. Reversal preserves interleaving, so
// validity carries over unconditionally.
BookEmbedding reflect(const BookEmbedding& emb);

// Rotate and/or reflect emb so its spine becomes target. target must list
// the same vertices in some rotation or reflection of emb's cyclic order;
// order_mismatch otherwise.
BookEmbedding align_to(const BookEmbedding& emb, const SpineOrder& target);

// Crossing pairs over all edges of the certificate, ignoring pages. Zero for
// any outerplanar graph laid out on its hamiltonian cycle order.
long long total_crossing_pairs(const BookEmbedding& emb);

}  // namespace matchbook
