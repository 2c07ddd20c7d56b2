#include <doctest.h>

#include <random>

#include "matchbook/embedding.hpp"
#include "matchbook/generators.hpp"
#include "test_util.hpp"

using namespace matchbook;
using namespace testutil;

TEST_SUITE("graph") {

TEST_CASE("build_graph validates") {
    Graph tri = make(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(tri.max_degree() == 2);
    CHECK(tri.edge_count() == 3);

    Graph diamond = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK(diamond.max_degree() == 3);

    CHECK_THROWS_AS(make(2, {{0, 1}, {0, 1}}), Error);  // duplicate
    CHECK_THROWS_AS(make(2, {{0, 1}, {1, 0}}), Error);  // duplicate, reversed
    CHECK_THROWS_AS(make(3, {{0, 0}}), Error);          // self-loop
    CHECK_THROWS_AS(make(3, {{0, 3}}), Error);          // out of range
    CHECK_THROWS_AS(make(3, {{-1, 2}}), Error);
}

TEST_CASE("max_degree") {
    CHECK(gen_family("cycle", 5).max_degree() == 2);
    CHECK(gen_family("diamond", 4).max_degree() == 3);
    CHECK(gen_family("star", 5).max_degree() == 4);  // K_{1,4}
    CHECK(Graph(4, std::vector<Edge>{}).max_degree() == 0);
}

TEST_CASE("blocks") {
    SUBCASE("bowtie: two triangle blocks at one cut vertex") {
        auto dec = blocks(gen_family("bowtie", 5));
        REQUIRE(dec.blocks.size() == 2);
        CHECK(dec.cut_vertices == std::vector<Vertex>{2});
        CHECK(dec.blocks[0].vertices == std::vector<Vertex>{0, 1, 2});
        CHECK(dec.blocks[1].vertices == std::vector<Vertex>{2, 3, 4});
        CHECK(dec.block_tree == std::vector<std::pair<int, Vertex>>{{0, 2}, {1, 2}});
    }
    SUBCASE("biconnected graph is one block") {
        auto dec = blocks(gen_family("cycle", 4));
        CHECK(dec.blocks.size() == 1);
        CHECK(dec.cut_vertices.empty());
    }
    SUBCASE("path has single-edge blocks") {
        auto dec = blocks(gen_family("path", 3));
        REQUIRE(dec.blocks.size() == 2);
        CHECK(dec.cut_vertices == std::vector<Vertex>{1});
        CHECK(dec.blocks[0].edges == std::vector<Edge>{Edge(0, 1)});
        CHECK(dec.blocks[1].edges == std::vector<Edge>{Edge(1, 2)});
    }
    SUBCASE("edge partition") {
        for (const Graph& g : {gen_family("bowtie", 5), gen_family("fan", 6),
                               gen_family("path", 7), gen_maximal_outerplanar(9, 3)}) {
            auto dec = blocks(g);
            size_t total = 0;
            for (const Block& b : dec.blocks) total += b.edges.size();
            CHECK(total == static_cast<size_t>(g.edge_count()));
        }
    }
}

TEST_CASE("is_biconnected") {
    CHECK(is_biconnected(gen_family("cycle", 4)));
    CHECK_FALSE(is_biconnected(gen_family("path", 3)));
    CHECK_FALSE(is_biconnected(gen_family("bowtie", 5)));
    CHECK_FALSE(is_biconnected(make(2, {{0, 1}})));  // K2 by definition
    CHECK_FALSE(is_biconnected(Graph(3, std::vector<Edge>{})));
}

TEST_CASE("cut vertex characterization, exhaustive small graphs") {
    std::vector<Graph> graphs = {gen_family("bowtie", 5), gen_family("path", 5),
                                 gen_family("star", 6),   gen_family("fan", 6),
                                 gen_family("diamond", 4)};
    for (const Graph& g : enumerated_corpus(3, 6)) graphs.push_back(g);
    for (const Graph& g : graphs) {
        if (!g.is_connected()) continue;
        auto dec = blocks(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            bool disconnects = g.vertex_count() >= 3 && !remove_vertex(g, v).is_connected();
            CHECK(disconnects == dec.is_cut_vertex(v));
            if (dec.is_cut_vertex(v)) CHECK(dec.blocks_at(v).size() >= 2);
        }
    }
}

TEST_CASE("recognize_outerplanar") {
    SUBCASE("diamond") {
        auto w = recognize_outerplanar(gen_family("diamond", 4));
        CHECK(w.cycle_order.sequence() == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(w.chords == std::vector<Edge>{Edge(0, 2)});
    }
    SUBCASE("plain cycle") {
        auto w = recognize_outerplanar(gen_family("cycle", 7));
        CHECK(w.cycle_order.sequence() == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
        CHECK(w.chords.empty());
    }
    SUBCASE("K4 has crossing chords") {
        CHECK_THROWS_AS(recognize_outerplanar(gen_family("k4", 4)), Error);
        try {
            recognize_outerplanar(gen_family("k4", 4));
        } catch (const Error& e) {
            CHECK(e.code() == errc::not_outerplanar);
        }
    }
    SUBCASE("K23 stalls or fails reinsertion") {
        Graph k23 = make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
        CHECK_THROWS_AS(recognize_outerplanar(k23), Error);
    }
    SUBCASE("non-biconnected input") {
        try {
            recognize_outerplanar(gen_family("path", 4));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == errc::not_biconnected);
        }
    }
}

TEST_CASE("degree2_vertices") {
    CHECK(gen_family("diamond", 4).degree2_vertices() == std::vector<Vertex>{1, 3});
    CHECK(gen_family("cycle", 6).degree2_vertices() == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("every biconnected outerplanar graph recognizes with two degree-2 vertices") {
    for (const Graph& g : enumerated_corpus(3, 7)) {
        auto w = recognize_outerplanar(g);
        CHECK(w.cycle_order.size() == g.vertex_count());
        CHECK(g.degree2_vertices().size() >= 2);
        // chords pairwise noncrossing under the witness order
        for (size_t i = 0; i < w.chords.size(); ++i)
            for (size_t j = i + 1; j < w.chords.size(); ++j)
                CHECK_FALSE(crosses(w.cycle_order, w.chords[i], w.chords[j]));
        // consecutive witness vertices really are adjacent
        const auto& seq = w.cycle_order.sequence();
        for (int i = 0; i < w.cycle_order.size(); ++i)
            CHECK(g.has_edge(seq[i], seq[(i + 1) % seq.size()]));
    }
}

TEST_CASE("witness cycle is relabeling-invariant") {
    std::mt19937_64 rng(2024);
    for (const Graph& g : enumerated_corpus(4, 6)) {
        auto base = cyclic_normal_form(recognize_outerplanar(g).cycle_order.sequence());
        std::vector<Vertex> perm(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
        for (int trial = 0; trial < 3; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph h = relabel(g, perm);
            auto seq = recognize_outerplanar(h).cycle_order.sequence();
            // map back through the inverse permutation
            std::vector<Vertex> inv(perm.size());
            for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Vertex>(i);
            for (Vertex& v : seq) v = inv[v];
            CHECK(cyclic_normal_form(seq) == base);
        }
    }
}

}  // TEST_SUITE
