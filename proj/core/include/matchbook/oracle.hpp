#pragma once

#include <functional>
#include <optional>

#include "matchbook/embedding.hpp"
#include "matchbook/graph.hpp"

namespace matchbook {

// Ground truth from exhaustive search, independent of the constructive
// embedder.
struct OracleResult {
    int mbt = 0;
    BookEmbedding witness;
    long long orders_tried = 0;
    long long nodes_expanded = 0;
};

// Backtracking page assignment for a fixed spine order: edges sorted by span
// (longest first) get pages subject to the matching and noncrossing rules.
// nullopt means no assignment fits the budget.
std::optional<BookEmbedding> exact_mbt_fixed_order(const Graph& g, const SpineOrder& order,
                                                   int page_budget,
                                                   long long* nodes_expanded = nullptr);

// Exact matching book thickness by iterative deepening over the page count
// and search over spine orders. Rotations and reflections of the spine are
// equivalent, so vertex 0 is pinned first and each reflection class is tried
// once. Factorial in n: refuses n > 9 unless allow_large. nullopt when
// max_pages is exhausted.
std::optional<OracleResult> exact_mbt(const Graph& g, int max_pages, bool allow_large = false);

// Exact edge chromatic number by backtracking. Refuses more than 24 edges
// unless allow_large.
int chromatic_index(const Graph& g, bool allow_large = false);

// Every biconnected outerplanar graph whose hamiltonian cycle is 0,1,...,n-1:
// the n-cycle plus each set of pairwise noncrossing chords, in deterministic
// order. Labeled enumeration, no isomorphism reduction. Requires 3 <= n <= 10.
void enumerate_biconnected_outerplanar(int n, const std::function<void(const Graph&)>& yield);

std::vector<Graph> all_biconnected_outerplanar(int n);

}  // namespace matchbook
