#include <doctest.h>

#include "matchbook/generators.hpp"
#include "test_util.hpp"

using namespace matchbook;
using namespace testutil;

TEST_SUITE("generators") {

TEST_CASE("maximal outerplanar") {
    SUBCASE("smallest cases") {
        CHECK(gen_maximal_outerplanar(3, 0).edge_count() == 3);
        Graph quad = gen_maximal_outerplanar(4, 0);
        CHECK(quad.edge_count() == 5);
        CHECK(quad.max_degree() == 3);
    }
    SUBCASE("pinned instance") {
        Graph g = gen_maximal_outerplanar(20, 7);
        CHECK(g.edge_count() == 37);  // n + (n-3)
        CHECK(is_biconnected(g));
        CHECK_NOTHROW(recognize_outerplanar(g));
        CHECK(gen_maximal_outerplanar(20, 7).edges() == g.edges());  // bit-reproducible
        CHECK(gen_maximal_outerplanar(20, 8).edges() != g.edges());
    }
    SUBCASE("shape across sizes") {
        for (int n : {5, 9, 24, 61}) {
            Graph g = gen_maximal_outerplanar(n, 13);
            CHECK(g.edge_count() == 2 * n - 3);
            CHECK(g.degree2_vertices().size() >= 2);
            auto w = recognize_outerplanar(g);
            // the construction cycle is 0..n-1 and recognition finds it
            std::vector<Vertex> identity(n);
            for (int i = 0; i < n; ++i) identity[i] = i;
            CHECK(w.cycle_order.sequence() == identity);
        }
    }
}

TEST_CASE("thinned outerplanar") {
    GenSpec spec;
    spec.n = 12;
    spec.seed = 3;
    SUBCASE("keep-all equals the triangulation") {
        spec.chord_keep_prob = 1.0;
        CHECK(gen_biconnected_outerplanar(spec).edges() ==
              gen_maximal_outerplanar(12, 3).edges());
    }
    SUBCASE("keep-none is the bare cycle") {
        spec.chord_keep_prob = 0.0;
        Graph g = gen_biconnected_outerplanar(spec);
        CHECK(g.edge_count() == 12);
        CHECK(g.max_degree() == 2);
    }
    SUBCASE("half keep is reproducible and outerplanar") {
        spec.chord_keep_prob = 0.5;
        Graph g = gen_biconnected_outerplanar(spec);
        CHECK(is_biconnected(g));
        CHECK_NOTHROW(recognize_outerplanar(g));
        CHECK(gen_biconnected_outerplanar(spec).edges() == g.edges());
    }
    SUBCASE("probability is validated") {
        spec.chord_keep_prob = 1.5;
        CHECK_THROWS_AS(gen_biconnected_outerplanar(spec), Error);
    }
}

TEST_CASE("named families") {
    CHECK(gen_family("cycle", 6).edge_count() == 6);
    CHECK(gen_family("path", 4).edge_count() == 3);
    CHECK(gen_family("star", 5).degree(0) == 4);

    Graph fan = gen_family("fan", 5);
    CHECK(fan.degree(4) == 4);  // apex sees every path vertex
    CHECK(fan.max_degree() == 4);
    CHECK_NOTHROW(recognize_outerplanar(fan));

    Graph bowtie = gen_family("bowtie", 5);
    CHECK(bowtie.edge_count() == 6);
    CHECK(bowtie.degree(2) == 4);

    CHECK(gen_family("diamond", 4).edges() ==
          std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(2, 3)});
    CHECK(gen_family("k4", 4).edge_count() == 6);

    CHECK_THROWS_AS(gen_family("moebius", 8), Error);
    CHECK_THROWS_AS(gen_family("bowtie", 6), Error);
    CHECK_THROWS_AS(gen_family("cycle", 2), Error);
    try {
        gen_family("nope", 4);
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_family);
    }
}

}  // TEST_SUITE
