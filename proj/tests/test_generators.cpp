#include <set>

#include "doctest.h"
#include "euler/canonical.hpp"
#include "euler/connectivity.hpp"
#include "euler/core.hpp"
#include "euler/generators.hpp"
#include "test_helpers.hpp"

using namespace euler;
using namespace testutil;

TEST_CASE("euler_grid(1,1) is one directed 4-circle") {
    auto eg = euler_grid(1, 1, GridOrientation::all_same());
    CHECK(eg.graph.n() == 4);
    CHECK(eg.graph.m() == 4);
    CHECK(is_eulerian(eg.graph));
    EdgePath cell{eg.cell_edges(1, 1), {}};
    CHECK(cell.is_circle(eg.graph));
}

TEST_CASE("euler_grid(2,2) variants") {
    auto sw = swirl(2, 2);
    CHECK(sw.graph.n() == 12);
    CHECK(sw.graph.m() == 16);
    CHECK(is_eulerian(sw.graph));
    int cells = 0;
    for (int x = 1; x <= 2; ++x)
        for (int y = 1; y <= 2; ++y) {
            CHECK(EdgePath{sw.cell_edges(x, y), {}}.is_circle(sw.graph));
            ++cells;
        }
    CHECK(cells == 4);

    auto cb = euler_grid(2, 2, GridOrientation::checkerboard());
    CHECK(is_eulerian(cb.graph));
    CHECK(cb.cell_acw(1, 1) != cb.cell_acw(1, 2));

    auto cover = cycle_cover(sw.graph);
    std::set<int> covered;
    for (const auto& c : cover)
        for (Edge e : c.edges) covered.insert(e.id);
    CHECK((int)covered.size() == sw.graph.m());
}

TEST_CASE("euler grids are Eulerian for every orientation at small sizes") {
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n) {
            CHECK(is_eulerian(euler_grid(k, n, GridOrientation::all_same()).graph));
            CHECK(is_eulerian(euler_grid(k, n, GridOrientation::checkerboard()).graph));
        }
    // exhaustive over all orientation bitmaps while k*n <= 9
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}, {2, 4}, {1, 9}}) {
        for (int mask = 0; mask < (1 << (k * n)); ++mask) {
            std::vector<std::vector<bool>> bm(k, std::vector<bool>(n));
            for (int i = 0; i < k * n; ++i)
                bm[i / n][i % n] = (mask >> i) & 1;
            auto eg = euler_grid(k, n, GridOrientation::explicit_map(bm));
            CHECK(is_eulerian(eg.graph));
        }
    }
}

TEST_CASE("interior vertices of a swirl have degree 4") {
    auto sw = swirl(3, 3);
    int deg4 = 0;
    for (Vertex v : sw.graph.vertices())
        if (sw.graph.degree(v) == 4) ++deg4;
    // shared corners between grid-adjacent cells
    CHECK(deg4 == 3 * 2 + 2 * 3);
}

TEST_CASE("router invariants up to k = 12") {
    CHECK_THROWS_AS(router(1), input_error);
    for (int k = 2; k <= 12; ++k) {
        auto rt = router(k);
        CHECK(rt.graph.n() == k * (k - 1) / 2);
        CHECK(is_eulerian(rt.graph));
        REQUIRE((int)rt.circles.size() == k);
        std::set<int> used;
        for (const auto& c : rt.circles) {
            CHECK(c.is_circle(rt.graph));
            for (Edge e : c.edges) CHECK(used.insert(e.id).second);
        }
        CHECK((int)used.size() == rt.graph.m());
        // two circles meet in exactly the designated vertex
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                std::set<int> vi, common;
                for (Edge e : rt.circles[i - 1].edges) vi.insert(rt.graph.tail(e).id);
                for (Edge e : rt.circles[j - 1].edges)
                    if (vi.count(rt.graph.tail(e).id)) common.insert(rt.graph.tail(e).id);
                REQUIRE(common.size() == 1);
                CHECK(*common.begin() == rt.meeting(i, j).id);
            }
    }
}

TEST_CASE("router(2) degenerates to two loops on one vertex") {
    auto rt = router(2);
    CHECK(rt.graph.n() == 1);
    CHECK(rt.graph.m() == 2);
    for (Edge e : rt.graph.edges()) CHECK(rt.graph.is_loop(e));
}

TEST_CASE("antichain members, raw") {
    Digraph g1 = antichain_member(1, false);
    CHECK(g1.n() == 7);
    CHECK(g1.m() == 6);
    std::vector<Vertex> deg3;
    for (Vertex v : g1.vertices())
        if (g1.degree(v) == 3) deg3.push_back(v);
    REQUIRE(deg3.size() == 2);
    CHECK(((deg3[0] == AntichainIds::v(0) && deg3[1] == AntichainIds::v(2)) ||
           (deg3[1] == AntichainIds::v(0) && deg3[0] == AntichainIds::v(2))));
    CHECK_FALSE(is_eulerian(g1));
    CHECK_FALSE(is_eulerian(antichain_member(2, false)));

    // alternating middle: v0->v1 and v2->v1 exist, v1->v2 does not
    Digraph g2 = antichain_member(2, false);
    auto has_arc = [&](Vertex a, Vertex b) {
        for (Edge e : g2.out_edges(a))
            if (g2.head(e) == b) return true;
        return false;
    };
    CHECK(has_arc(AntichainIds::v(0), AntichainIds::v(1)));
    CHECK(has_arc(AntichainIds::v(2), AntichainIds::v(1)));
    CHECK(has_arc(AntichainIds::v(2), AntichainIds::v(3)));
    CHECK(has_arc(AntichainIds::v(4), AntichainIds::v(3)));
    CHECK_FALSE(has_arc(AntichainIds::v(1), AntichainIds::v(2)));
}

TEST_CASE("eulerianized antichain members") {
    for (int k = 1; k <= 5; ++k) {
        Digraph g = antichain_member(k, true);
        CHECK(is_eulerian(g));
        // bead is the unique maximum-degree vertex; only it and v_{2k} exceed 4
        Vertex bead = AntichainIds::bead(k);
        CHECK(g.degree(bead) == 4 * k + 6);
        int over4 = 0;
        for (Vertex v : g.vertices()) {
            if (g.degree(v) > 4) ++over4;
            if (!(v == bead)) CHECK(g.degree(v) < g.degree(bead));
        }
        CHECK(over4 == 2);
        // subdivision removed parallel bead edges
        std::set<std::pair<int, int>> seen;
        for (Edge e : g.out_edges(bead)) CHECK(seen.insert({bead.id, g.head(e).id}).second);
        seen.clear();
        for (Edge e : g.in_edges(bead)) CHECK(seen.insert({g.tail(e).id, bead.id}).second);
    }
}

TEST_CASE("fence3 gadget") {
    auto f = fence3();
    CHECK(f.graph.n() == 15);
    CHECK(f.graph.m() == 21);
    for (Vertex s : f.s) CHECK(f.graph.in_degree(s) == 0);
    for (Vertex t : f.t) CHECK(f.graph.out_degree(t) == 0);
    Linkage l = max_directed_paths(f.graph, f.s, f.t);
    CHECK(l.order() == 3);
    CHECK(l.edge_disjoint(f.graph));
}

TEST_CASE("undirected grids") {
    auto g11 = undirected_grid(1, 1);
    CHECK(g11.n() == 1);
    CHECK(g11.m() == 0);
    auto g22 = undirected_grid(2, 2);
    CHECK(g22.n() == 4);
    CHECK(g22.m() == 4);
    auto g34 = undirected_grid(3, 4);
    CHECK(g34.n() == 12);
    CHECK(g34.m() == 17);  // n(m-1) + m(n-1)
}

TEST_CASE("random_eulerian sampler") {
    Digraph empty = random_eulerian(5, 0, 1);
    CHECK(empty.n() == 5);
    CHECK(empty.m() == 0);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Digraph g = random_eulerian(1 + seed % 7, 1 + seed % 3, seed);
        CHECK(is_eulerian(g));
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Digraph g = random_eulerian(5, 2, seed, 4);
        CHECK(is_eulerian(g));
        CHECK(g.max_degree() <= 4);
    }
    // deterministic per seed
    CHECK(random_eulerian(6, 3, 42) == random_eulerian(6, 3, 42));
}

TEST_CASE("enumerate_eulerian at tiny sizes") {
    auto one = enumerate_eulerian(1, 2, 4, 2);
    CHECK(one.size() == 2);  // one loop; two loops
    auto two = enumerate_eulerian(2, 2, 4, 2);
    CHECK(two.size() == 4);  // + 2-circle; loop next to loop
    for (const auto& g : two) CHECK(is_eulerian(g));
    // pairwise non-isomorphic
    std::set<std::string> codes;
    for (const auto& g : two) CHECK(codes.insert(canonical_form(g)).second);
}
