#include "doctest.h"
#include "euler/canonical.hpp"
#include "euler/constructions.hpp"
#include "euler/core.hpp"
#include "euler/generators.hpp"
#include "euler/immersion.hpp"
#include "test_helpers.hpp"

using namespace euler;
using namespace testutil;

TEST_CASE("swirl into euler grid: uniform shortcut at k = 1") {
    auto m = swirl_into_eulergrid(1, GridOrientation::all_same());
    CHECK(validate_model(m).ok);
    CHECK(m.strong);
    // k = 1: a 4-circle into the 2x2 grid; cross-check with the decider
    auto res = find_immersion(m.guest, m.host, SearchOptions{});
    CHECK(res.answer == verdict::yes);
}

TEST_CASE("swirl into euler grid: k = 2 all orientations of interest") {
    auto all = swirl_into_eulergrid(2, GridOrientation::all_same());
    CHECK(validate_model(all).ok);
    auto cb = swirl_into_eulergrid(2, GridOrientation::checkerboard());
    CHECK(validate_model(cb).ok);
    // all-clockwise grid exercises the reflection branch
    std::vector<std::vector<bool>> cw(8, std::vector<bool>(8, false));
    auto m = swirl_into_eulergrid(2, GridOrientation::explicit_map(cw));
    CHECK(validate_model(m).ok);
}

TEST_CASE("swirl into euler grid: seeded random orientations at k = 2") {
    std::mt19937_64 rng(20'26);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<std::vector<bool>> bm(8, std::vector<bool>(8));
        for (auto& col : bm)
            for (size_t i = 0; i < col.size(); ++i) col[i] = rng() % 2;
        auto m = swirl_into_eulergrid(2, GridOrientation::explicit_map(bm));
        CHECK(validate_model(m).ok);
        CHECK(m.strong);
    }
}

TEST_CASE("router hosts the 2-circle") {
    Digraph g = directed_circle(2);
    auto out = into_router(g);
    CHECK(out.host.k == 12);
    CHECK(validate_model(out.model).ok);
    CHECK(out.model.strong);
}

TEST_CASE("router: trivial and edge cases") {
    Digraph lone = edgeless(1);
    auto out = into_router(lone);
    CHECK(validate_model(out.model).ok);
    CHECK(out.model.emap.empty());

    Digraph too_big;
    for (int i = 0; i < 4; ++i) too_big.add_vertex();
    for (int i = 1; i <= 3; ++i) {
        too_big.add_edge(Vertex{0}, Vertex{i});
        too_big.add_edge(Vertex{i}, Vertex{0});
    }
    CHECK_THROWS_AS(into_router(too_big), input_error);
}

TEST_CASE("router hosts graphs with loops and parallels") {
    // two loops on one vertex
    Digraph loops;
    Vertex v = loops.add_vertex();
    loops.add_edge(v, v);
    loops.add_edge(v, v);
    auto out = into_router(loops);
    CHECK(validate_model(out.model).ok);

    // doubled 2-circle
    Digraph dbl;
    dbl.add_vertex();
    dbl.add_vertex();
    for (int r = 0; r < 2; ++r) {
        dbl.add_edge(Vertex{0}, Vertex{1});
        dbl.add_edge(Vertex{1}, Vertex{0});
    }
    auto out2 = into_router(dbl);
    CHECK(validate_model(out2.model).ok);
}

TEST_CASE("router: random samples") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Digraph g = random_eulerian(3 + seed % 3, 2, 50'000 + seed, 4);
        auto out = into_router(g);
        CHECK(validate_model(out.model).ok);
        CHECK(out.model.strong);
    }
}

TEST_CASE("degree reduction leaves low-degree graphs alone") {
    Digraph g = directed_circle(4);
    auto red = reduce_degree6(g);
    CHECK(red.graph == g);
    CHECK(red.gadgets.empty());
}

TEST_CASE("degree reduction rejects loops at degree-6 vertices") {
    Digraph g;
    Vertex v = g.add_vertex();
    for (int i = 0; i < 3; ++i) g.add_edge(v, v);
    CHECK_THROWS_AS(reduce_degree6(g), input_error);

    Digraph odd;
    odd.add_vertex();
    odd.add_vertex();
    for (int i = 0; i < 4; ++i) {
        odd.add_edge(Vertex{0}, Vertex{1});
        odd.add_edge(Vertex{1}, Vertex{0});
    }
    CHECK_THROWS_AS(reduce_degree6(odd), input_error);  // degree 8
}

TEST_CASE("degree reduction replaces a degree-6 hub") {
    // three triangles through one hub vertex
    Digraph g;
    Vertex hub = g.add_vertex();
    for (int t = 0; t < 3; ++t) {
        Vertex a = g.add_vertex();
        Vertex b = g.add_vertex();
        g.add_edge(hub, a);
        g.add_edge(a, b);
        g.add_edge(b, hub);
    }
    REQUIRE(g.degree(hub) == 6);
    auto red = reduce_degree6(g);
    CHECK(is_eulerian(red.graph));
    CHECK(red.graph.max_degree() <= 4);
    REQUIRE(red.gadgets.size() == 1);
    CHECK(red.gadgets[0].original == hub);
    CHECK_FALSE(red.graph.has_vertex(hub));
    // the reduced graph still immerses the original contraction-wise:
    // vertex count grows by 15 - 1, edge count by 21
    CHECK(red.graph.n() == g.n() + 14);
    CHECK(red.graph.m() == g.m() + 21);
}
