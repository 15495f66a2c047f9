#include <random>

#include "doctest.h"
#include "euler/connectivity.hpp"
#include "euler/core.hpp"
#include "euler/generators.hpp"
#include "test_helpers.hpp"

using namespace euler;
using namespace testutil;

TEST_CASE("menger on a directed 4-circle") {
    Digraph g = directed_circle(4);
    auto pack = max_bidirectional_packing(g, {Vertex{0}}, {Vertex{2}});
    CHECK(pack.k == 1);
    REQUIRE(pack.forward.order() == 1);
    REQUIRE(pack.backward.order() == 1);
    CHECK(pack.forward.paths[0].source(g) == Vertex{0});
    CHECK(pack.forward.paths[0].target(g) == Vertex{2});
    CHECK(pack.backward.paths[0].source(g) == Vertex{2});
    CHECK(pack.backward.paths[0].target(g) == Vertex{0});
    // combined edge-disjointness
    Linkage all;
    all.paths = pack.forward.paths;
    all.paths.insert(all.paths.end(), pack.backward.paths.begin(), pack.backward.paths.end());
    CHECK(all.edge_disjoint(g));

    auto cut = min_separating_cut(g, {Vertex{0}}, {Vertex{2}});
    REQUIRE(cut.has_value());
    CHECK(cut->order() == 2);
}

TEST_CASE("different weak components give k = 0") {
    Digraph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    g.add_edge(Vertex{0}, Vertex{1});
    g.add_edge(Vertex{1}, Vertex{0});
    g.add_edge(Vertex{2}, Vertex{3});
    g.add_edge(Vertex{3}, Vertex{2});
    auto pack = max_bidirectional_packing(g, {Vertex{0}}, {Vertex{2}});
    CHECK(pack.k == 0);
}

TEST_CASE("overlapping sides are rejected") {
    Digraph g = directed_circle(3);
    CHECK_THROWS_AS(max_bidirectional_packing(g, {Vertex{0}}, {Vertex{0}}), input_error);
    CHECK_FALSE(min_separating_cut(g, {Vertex{0}}, {Vertex{0}}).has_value());
}

TEST_CASE("router(4) duality against subset brute force") {
    auto rt = router(4);
    std::vector<Vertex> x1{rt.meeting(1, 2)}, x2{rt.meeting(3, 4)};
    int brute = brute_min_cut_order(rt.graph, x1, x2);
    auto pack = max_bidirectional_packing(rt.graph, x1, x2);
    CHECK(2 * pack.k == brute);
    auto cut = min_separating_cut(rt.graph, x1, x2);
    REQUIRE(cut.has_value());
    CHECK(cut->order() == brute);
}

TEST_CASE("duality exact on random Eulerian instances (|V| <= 7)") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Digraph g = random_eulerian(2 + seed % 6, 1 + seed % 3, 1000 + seed);
        std::mt19937_64 rng(seed);
        int n = g.n();
        Vertex a = g.vertices()[rng() % n];
        Vertex b = g.vertices()[rng() % n];
        if (a == b) continue;
        auto pack = max_bidirectional_packing(g, {a}, {b});
        int brute = brute_min_cut_order(g, {a}, {b});
        CHECK(2 * pack.k == brute);
        auto cut = min_separating_cut(g, {a}, {b});
        REQUIRE(cut.has_value());
        CHECK(cut->order() == brute);
        // witness re-validation
        Linkage all;
        all.paths = pack.forward.paths;
        all.paths.insert(all.paths.end(), pack.backward.paths.begin(), pack.backward.paths.end());
        CHECK(all.edge_disjoint(g));
        for (const auto& p : pack.forward.paths) {
            CHECK(p.source(g) == a);
            CHECK(p.target(g) == b);
        }
        for (const auto& p : pack.backward.paths) {
            CHECK(p.source(g) == b);
            CHECK(p.target(g) == a);
        }
    }
}

TEST_CASE("min cut side is the smallest one") {
    // dumbbell: triangle - bridge pair - triangle
    Digraph g;
    for (int i = 0; i < 6; ++i) g.add_vertex();
    auto tri = [&](int a, int b, int c) {
        g.add_edge(Vertex{a}, Vertex{b});
        g.add_edge(Vertex{b}, Vertex{c});
        g.add_edge(Vertex{c}, Vertex{a});
    };
    tri(0, 1, 2);
    tri(0, 1, 2);  // doubled, so delta({0}) = 4 beats the bridge pair
    tri(3, 4, 5);
    g.add_edge(Vertex{2}, Vertex{3});
    g.add_edge(Vertex{3}, Vertex{2});
    auto cut = min_separating_cut(g, {Vertex{0}}, {Vertex{4}});
    REQUIRE(cut.has_value());
    CHECK(cut->order() == 2);
    CHECK(cut->side.size() == 3);  // the triangle around vertex 0, not more
}

TEST_CASE("linearize preserves order and type") {
    Digraph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    Edge a1 = g.add_edge(Vertex{0}, Vertex{1});
    Edge a2 = g.add_edge(Vertex{1}, Vertex{2});
    Edge b1 = g.add_edge(Vertex{2}, Vertex{1});
    Edge b2 = g.add_edge(Vertex{1}, Vertex{3});
    // pinched path through vertex 1 twice
    EdgePath pinch{{a1, a2, b1, b2}, {}};
    REQUIRE_FALSE(pinch.is_linear(g));
    EdgePath lin = linearize_path(g, pinch);
    CHECK(lin.is_linear(g));
    CHECK(lin.first() == a1);
    CHECK(lin.last() == b2);
    CHECK(lin.source(g) == Vertex{0});
    CHECK(lin.target(g) == Vertex{3});

    // already linear stays unchanged
    EdgePath straight{{a1, a2}, {}};
    CHECK(linearize_path(g, straight) == straight);
}

TEST_CASE("linearize on random linkages keeps order and type (500 trials)") {
    std::mt19937_64 rng(99);
    int done = 0;
    for (std::uint64_t seed = 0; done < 500; ++seed) {
        REQUIRE(seed < 5000);
        Digraph g = random_eulerian(3 + seed % 5, 2, 7'000 + seed);
        Vertex a = g.vertices()[rng() % g.n()];
        Vertex b = g.vertices()[rng() % g.n()];
        if (a == b) continue;
        auto pack = max_bidirectional_packing(g, {a}, {b});
        if (pack.k == 0) continue;
        Linkage all;
        all.paths = pack.forward.paths;
        all.paths.insert(all.paths.end(), pack.backward.paths.begin(), pack.backward.paths.end());
        Linkage lin = linearize(g, all);
        CHECK(lin.order() == all.order());
        CHECK(lin.type(g) == all.type(g));
        CHECK(lin.all_linear(g));
        CHECK(lin.edge_disjoint(g));
        ++done;
    }
}
