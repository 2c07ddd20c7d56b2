#pragma once

#include <cstdint>
#include <string_view>

#include "matchbook/graph.hpp"

namespace matchbook {

// Reproducible corpus recipe. Generation is a pure function of the recipe:
// the engine is std::mt19937_64 (fixed constants in the standard), so corpora
// match bit for bit across platforms.
struct GenSpec {
    std::string family = "random";
    int n = 3;
    double chord_keep_prob = 1.0;
    std::uint64_t seed = 0;
};

// n-cycle plus a random triangulation of the inner polygon (n-3 noncrossing
// chords via recursive ear splitting). Biconnected, outerplanar, 2n-3 edges.
Graph gen_maximal_outerplanar(int n, std::uint64_t seed);

// Triangulation thinned by keeping each chord independently with
// chord_keep_prob; cycle edges always stay, so the result remains
// biconnected outerplanar.
Graph gen_biconnected_outerplanar(const GenSpec& spec);

// Deterministic named fixtures: cycle, path, star, fan, bowtie, diamond, k4.
Graph gen_family(std::string_view name, int n);

}  // namespace matchbook
