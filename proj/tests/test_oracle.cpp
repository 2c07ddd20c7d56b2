#include <doctest.h>

#include <random>

#include "matchbook/generators.hpp"
#include "matchbook/oracle.hpp"
#include "test_util.hpp"

using namespace matchbook;
using namespace testutil;

namespace {

// Independent count of noncrossing chord subsets of the n-gon: plain bitmask
// brute force, nothing shared with the enumerator's backtracking.
long long brute_force_count(int n) {
    std::vector<Edge> chords;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1)) chords.emplace_back(i, j);
    long long count = 0;
    for (long long mask = 0; mask < (1LL << chords.size()); ++mask) {
        bool ok = true;
        for (size_t i = 0; i < chords.size() && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (size_t j = i + 1; j < chords.size() && ok; ++j) {
                if (!(mask >> j & 1)) continue;
                const Edge& a = chords[i];
                const Edge& b = chords[j];
                if ((a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v))
                    ok = false;
            }
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("fixed-order search") {
    Graph c5 = gen_family("cycle", 5);
    SpineOrder order({0, 1, 2, 3, 4});
    CHECK_FALSE(exact_mbt_fixed_order(c5, order, 2).has_value());
    auto three = exact_mbt_fixed_order(c5, order, 3);
    REQUIRE(three.has_value());
    CHECK(verify(c5, *three).ok);
    CHECK(three->pages_used() == 3);

    Graph diamond = gen_family("diamond", 4);
    auto cert = exact_mbt_fixed_order(diamond, SpineOrder({0, 1, 2, 3}), 3);
    REQUIRE(cert.has_value());
    CHECK(verify(diamond, *cert).ok);
}

TEST_CASE("exact_mbt on the classics") {
    auto mbt = [](const Graph& g) {
        auto r = exact_mbt(g, std::max(3, g.edge_count()));
        REQUIRE(r.has_value());
        auto report = verify(g, r->witness);
        CHECK(report.ok);
        CHECK(report.pages_used == r->mbt);
        return r->mbt;
    };
    CHECK(mbt(gen_family("cycle", 3)) == 3);
    CHECK(mbt(gen_family("cycle", 7)) == 3);
    CHECK(mbt(gen_family("cycle", 6)) == 2);
    // On any spine order of K4 one of its three perfect matchings interleaves
    // and must split, so 3 pages cannot carry all 6 edges.
    CHECK(mbt(gen_family("k4", 4)) == 4);
    CHECK(mbt(gen_family("diamond", 4)) == 3);
    CHECK(mbt(gen_family("bowtie", 5)) == 4);
    CHECK(mbt(gen_family("star", 5)) == 4);
}

TEST_CASE("budget exhaustion reports infeasible") {
    CHECK_FALSE(exact_mbt(gen_family("cycle", 5), 2).has_value());
}

TEST_CASE("mbt is invariant under relabeling") {
    std::mt19937_64 rng(99);
    std::vector<Graph> sample = {gen_family("diamond", 4), gen_family("bowtie", 5),
                                 gen_maximal_outerplanar(6, 1), gen_family("cycle", 5)};
    for (const Graph& g : sample) {
        auto base = exact_mbt(g, g.edge_count());
        REQUIRE(base.has_value());
        std::vector<Vertex> perm(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
        for (int trial = 0; trial < 2; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            auto shuffled = exact_mbt(relabel(g, perm), g.edge_count());
            REQUIRE(shuffled.has_value());
            CHECK(shuffled->mbt == base->mbt);
        }
    }
}

TEST_CASE("chromatic index") {
    CHECK(chromatic_index(gen_family("cycle", 5)) == 3);
    CHECK(chromatic_index(gen_family("cycle", 6)) == 2);
    CHECK(chromatic_index(gen_family("diamond", 4)) == 3);
    CHECK(chromatic_index(gen_family("k4", 4)) == 3);
    CHECK(chromatic_index(gen_family("star", 6)) == 5);
    CHECK(chromatic_index(Graph(3, std::vector<Edge>{})) == 0);
}

TEST_CASE("lower-bound chain holds on small graphs") {
    std::vector<Graph> sample = enumerated_corpus(3, 5);
    sample.push_back(gen_family("k4", 4));
    sample.push_back(gen_family("bowtie", 5));
    for (const Graph& g : sample) {
        auto r = exact_mbt(g, g.edge_count());
        REQUIRE(r.has_value());
        int chi = chromatic_index(g);
        CHECK(r->mbt >= chi);
        CHECK(chi >= g.max_degree());
    }
}

TEST_CASE("enumeration") {
    SUBCASE("counts") {
        CHECK(all_biconnected_outerplanar(3).size() == 1);
        CHECK(all_biconnected_outerplanar(4).size() == 3);
        CHECK(all_biconnected_outerplanar(5).size() == 11);
        for (int n = 4; n <= 7; ++n)
            CHECK(static_cast<long long>(all_biconnected_outerplanar(n).size()) ==
                  brute_force_count(n));
    }
    SUBCASE("members are biconnected outerplanar with the standard cycle") {
        for (const Graph& g : all_biconnected_outerplanar(6)) {
            CHECK(is_biconnected(g));
            auto w = recognize_outerplanar(g);
            CHECK(w.cycle_order.sequence() == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
        }
    }
    SUBCASE("range checks") {
        CHECK_THROWS_AS(all_biconnected_outerplanar(2), Error);
        CHECK_THROWS_AS(all_biconnected_outerplanar(11), Error);
    }
}

TEST_CASE("vertex cap") {
    Graph big = gen_maximal_outerplanar(10, 1);
    CHECK_THROWS_AS(exact_mbt(big, 5), Error);
    try {
        exact_mbt(big, 5);
    } catch (const Error& e) {
        CHECK(e.code() == errc::cap_exceeded);
    }
}

TEST_CASE("oracle agrees with the page distribution on an edgeless graph") {
    Graph g(4, std::vector<Edge>{});
    auto r = exact_mbt(g, 3);
    REQUIRE(r.has_value());
    CHECK(r->mbt == 0);
    CHECK(verify(g, r->witness).ok);
}

}  // TEST_SUITE
