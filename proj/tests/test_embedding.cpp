#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include <unordered_map>

#include "euler/connectivity.hpp"
#include "euler/core.hpp"
#include "euler/embedding.hpp"
#include "euler/generators.hpp"
#include "test_helpers.hpp"

using namespace euler;
using namespace testutil;

namespace {

// unique rotation for graphs of max degree 2
RotationEmbedding trivial_rotation(const Digraph& g) {
    RotationEmbedding r;
    for (Vertex v : g.vertices()) {
        std::vector<EdgeEnd> ends;
        for (Edge e : g.out_edges(v)) ends.push_back({e, false});
        for (Edge e : g.in_edges(v)) ends.push_back({e, true});
        r.rotation[v] = ends;
    }
    return r;
}

// independent oracle: enumerate all rotations (not only alternating ones)
bool oracle_plane_euler_embeddable(const Digraph& g) {
    std::vector<Vertex> vs = g.vertices();
    std::vector<std::vector<std::vector<EdgeEnd>>> all(vs.size());
    for (size_t i = 0; i < vs.size(); ++i) {
        std::vector<EdgeEnd> ends;
        for (Edge e : g.out_edges(vs[i])) ends.push_back({e, false});
        for (Edge e : g.in_edges(vs[i])) ends.push_back({e, true});
        if (ends.size() <= 2) {
            all[i] = {ends};
            continue;
        }
        std::vector<int> idx;
        for (size_t j = 1; j < ends.size(); ++j) idx.push_back((int)j);
        do {
            std::vector<EdgeEnd> rot{ends[0]};
            for (int j : idx) rot.push_back(ends[j]);
            all[i].push_back(std::move(rot));
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    std::vector<size_t> pick(vs.size(), 0);
    while (true) {
        RotationEmbedding r;
        for (size_t i = 0; i < vs.size(); ++i) r.rotation[vs[i]] = all[i][pick[i]];
        if (is_plane_euler_embedding(g, r)) return true;
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == all[i].size()) pick[i++] = 0;
        if (i == pick.size()) return false;
        if (pick.empty()) return false;
    }
}

bool edgeset_is_cycle(const Digraph& g, const std::vector<Edge>& es) {
    if (es.empty()) return false;
    VertexMap<int> in, out;
    std::unordered_map<int, std::vector<int>> und;  // connectivity
    for (Edge e : es) {
        out[g.tail(e)]++;
        in[g.head(e)]++;
        und[g.tail(e).id].push_back(g.head(e).id);
        und[g.head(e).id].push_back(g.tail(e).id);
    }
    for (auto& [v, c] : out)
        if ((in.count(v) ? in.at(v) : 0) != c) return false;
    for (auto& [v, c] : in)
        if ((out.count(v) ? out.at(v) : 0) != c) return false;
    // weak connectivity over touched vertices
    std::set<int> touched;
    for (auto& [v, nb] : und) touched.insert(v);
    std::set<int> seen{*touched.begin()};
    std::vector<int> stack{*touched.begin()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : und[v])
            if (seen.insert(u).second) stack.push_back(u);
    }
    return seen.size() == touched.size();
}

// closed edge sequences (cycles) of g up to a length cap
void enumerate_cycle_sequences(const Digraph& g, int max_len,
                               std::vector<std::vector<Edge>>& out) {
    std::vector<Edge> cur;
    std::set<int> used;
    std::function<void(Edge, Vertex)> dfs = [&](Edge first, Vertex at) {
        if (g.head(cur.back()) == g.tail(first) && !cur.empty()) out.push_back(cur);
        if ((int)cur.size() >= max_len) return;
        for (Edge e : g.out_edges(at)) {
            if (used.count(e.id) || e.id < first.id) continue;
            used.insert(e.id);
            cur.push_back(e);
            dfs(first, g.head(e));
            cur.pop_back();
            used.erase(e.id);
        }
    };
    for (Edge e : g.edges()) {
        cur = {e};
        used = {e.id};
        dfs(e, g.head(e));
    }
}

}  // namespace

TEST_CASE("faces of a directed 3-circle") {
    Digraph g = directed_circle(3);
    auto r = trivial_rotation(g);
    REQUIRE(valid_rotation(g, r));
    auto fs = faces(g, r);
    CHECK(fs.faces.size() == 2);
    CHECK(fs.genus == 0);
}

TEST_CASE("interleaved loops force genus 1") {
    Digraph g;
    Vertex v = g.add_vertex();
    Edge l1 = g.add_edge(v, v);
    Edge l2 = g.add_edge(v, v);
    RotationEmbedding inter;
    inter.rotation[v] = {{l1, false}, {l2, false}, {l1, true}, {l2, true}};
    CHECK(faces(g, inter).genus == 1);
    RotationEmbedding nested;
    nested.rotation[v] = {{l1, false}, {l2, false}, {l2, true}, {l1, true}};
    CHECK(faces(g, nested).genus == 0);
}

TEST_CASE("swirl canonical drawing is a plane Eulerian embedding") {
    for (int k = 1; k <= 3; ++k) {
        auto sw = swirl(k, k);
        auto rot = euler_grid_rotation(sw);
        REQUIRE(valid_rotation(sw.graph, rot));
        auto fs = faces(sw.graph, rot);
        CHECK(fs.genus == 0);
        for (Vertex v : sw.graph.vertices())
            if (sw.graph.degree(v) == 4)
                CHECK(vertex_embedding_class(sw.graph, rot, v) == VertexClass::eulerian_embedded);
        // every internal face outline is a circle: face dart count equals the
        // number of distinct vertices it visits
        for (const auto& f : fs.faces) {
            std::set<int> vs;
            for (Dart d : f) vs.insert((d.forward ? sw.graph.head(d.e) : sw.graph.tail(d.e)).id);
            CHECK(vs.size() == f.size());
        }
    }
}

TEST_CASE("checkerboard grids draw with strongly planar interior vertices") {
    auto cb = euler_grid(3, 3, GridOrientation::checkerboard());
    auto rot = euler_grid_rotation(cb);
    REQUIRE(valid_rotation(cb.graph, rot));
    CHECK(faces(cb.graph, rot).genus == 0);
    int planar = 0, eulerian = 0;
    for (Vertex v : cb.graph.vertices()) {
        if (cb.graph.degree(v) != 4) continue;
        auto cls = vertex_embedding_class(cb.graph, rot, v);
        if (cls == VertexClass::strongly_planar) ++planar;
        if (cls == VertexClass::eulerian_embedded) ++eulerian;
    }
    CHECK(planar > 0);
    CHECK(eulerian == 0);
}

TEST_CASE("vertex classification on explicit rotations") {
    Digraph g;
    Vertex u = g.add_vertex();
    for (int i = 0; i < 4; ++i) g.add_vertex();
    Edge i1 = g.add_edge(Vertex{1}, u);
    Edge i2 = g.add_edge(Vertex{2}, u);
    Edge o1 = g.add_edge(u, Vertex{3});
    Edge o2 = g.add_edge(u, Vertex{4});
    RotationEmbedding alt, paired;
    alt.rotation[u] = {{i1, true}, {o1, false}, {i2, true}, {o2, false}};
    paired.rotation[u] = {{i1, true}, {i2, true}, {o1, false}, {o2, false}};
    CHECK(vertex_embedding_class(g, alt, u) == VertexClass::eulerian_embedded);
    CHECK(vertex_embedding_class(g, paired, u) == VertexClass::strongly_planar);

    Digraph two = directed_circle(2);
    auto r2 = trivial_rotation(two);
    CHECK(vertex_embedding_class(two, r2, Vertex{0}) == VertexClass::eulerian_embedded);
}

TEST_CASE("plane Euler embeddings of standard families are found") {
    for (int k = 1; k <= 3; ++k) {
        auto sw = swirl(k, k);
        auto found = find_plane_euler_embedding(sw.graph);
        REQUIRE(found.answer == verdict::yes);
        CHECK(is_plane_euler_embedding(sw.graph, *found.embedding));
    }
    for (int n = 2; n <= 6; ++n) {
        auto found = find_plane_euler_embedding(directed_circle(n));
        REQUIRE(found.answer == verdict::yes);
    }
}

TEST_CASE("non-embeddable instances exist and the search agrees with the oracle") {
    // search + full-rotation oracle across a small corpus
    auto corpus = enumerate_eulerian(3, 6, 4, 2);
    int checked = 0, negative = 0;
    for (const auto& g : corpus) {
        if (g.n() + g.m() > 9) continue;
        auto mine = find_plane_euler_embedding(g);
        REQUIRE(mine.answer != verdict::inconclusive);
        bool naive = oracle_plane_euler_embeddable(g);
        CHECK((mine.answer == verdict::yes) == naive);
        ++checked;
        if (mine.answer == verdict::no) ++negative;
        if (mine.answer == verdict::yes)
            CHECK(is_plane_euler_embedding(g, *mine.embedding));
    }
    CHECK(checked > 30);
    CHECK(negative > 0);  // some small Eulerian digraph admits no plane Euler embedding
}

TEST_CASE("cut cycle around one interior vertex of a swirl") {
    auto sw = swirl(2, 2);
    auto rot = euler_grid_rotation(sw);
    // the shared corner between cells (1,1) and (2,1)
    Vertex v = sw.r(1, 1);
    REQUIRE(sw.graph.degree(v) == 4);
    // crossed edges in rotation order around v
    CutCycleDescriptor d;
    for (EdgeEnd end : rot.rotation.at(v)) d.crossed.push_back(end.e);
    auto chk = validate_cut_cycle(sw.graph, rot, d);
    REQUIRE(chk.ok);
    std::vector<Vertex> just_v{v};
    CHECK((chk.side == just_v || (int)chk.side.size() == sw.graph.n() - 1));
    CHECK(cut_cycle_alternating(sw.graph, d, chk.side));

    // a non-cut: two edges of one cell circle
    CutCycleDescriptor bad;
    bad.crossed = {sw.cell_edges(1, 1)[0], sw.cell_edges(1, 1)[1]};
    CHECK_FALSE(validate_cut_cycle(sw.graph, rot, bad).ok);
}

TEST_CASE("enumerated cut cycles always alternate (Lemma check, sample)") {
    int embeddings = 0;
    for (std::uint64_t seed = 0; embeddings < 20; ++seed) {
        REQUIRE(seed < 600);
        Digraph g = random_eulerian(3 + seed % 4, 2, 550'000 + seed, 4);
        if (!is_weakly_connected(g)) continue;
        auto found = find_plane_euler_embedding(g);
        if (found.answer != verdict::yes) continue;
        ++embeddings;
        auto en = enumerate_cut_cycles(g, *found.embedding, 6);
        REQUIRE(en.answer == verdict::yes);
        for (const auto& d : en.cycles) {
            auto chk = validate_cut_cycle(g, *found.embedding, d);
            REQUIRE(chk.ok);
            CHECK(cut_cycle_alternating(g, d, chk.side));
        }
    }
}

TEST_CASE("cut cycle enumeration matches a slow subset enumerator") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 12; ++seed) {
        REQUIRE(seed < 400);
        Digraph g = random_eulerian(3 + seed % 3, 2, 660'000 + seed, 4);
        if (g.m() > 9 || !is_weakly_connected(g)) continue;
        auto found = find_plane_euler_embedding(g);
        if (found.answer != verdict::yes) continue;
        ++done;
        auto fast = enumerate_cut_cycles(g, *found.embedding, 4);
        REQUIRE(fast.answer == verdict::yes);
        // slow: all <=4 subsets in all cyclic orders
        std::set<std::vector<int>> slow_keys, fast_keys;
        auto canon = [](std::vector<Edge> cyc) {
            std::vector<int> ids;
            for (Edge e : cyc) ids.push_back(e.id);
            std::vector<int> best;
            int n = (int)ids.size();
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<int> cur = ids;
                if (dir) std::reverse(cur.begin(), cur.end());
                for (int s = 0; s < n; ++s) {
                    std::vector<int> rot;
                    for (int i = 0; i < n; ++i) rot.push_back(cur[(s + i) % n]);
                    if (best.empty() || rot < best) best = rot;
                }
            }
            return best;
        };
        for (const auto& d : fast.cycles) fast_keys.insert(canon(d.crossed));
        std::vector<Edge> es = g.edges();
        int m = (int)es.size();
        for (int mask = 1; mask < (1 << m); ++mask) {
            if (__builtin_popcount(mask) > 4) continue;
            std::vector<Edge> sel;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) sel.push_back(es[i]);
            std::sort(sel.begin(), sel.end());
            do {
                CutCycleDescriptor d{sel};
                if (validate_cut_cycle(g, *found.embedding, d).ok) slow_keys.insert(canon(sel));
            } while (std::next_permutation(sel.begin(), sel.end()));
        }
        CHECK(fast_keys == slow_keys);
    }
}

TEST_CASE("subgraphs inside internal circles are Eulerian") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 15; ++seed) {
        REQUIRE(seed < 500);
        Digraph g = random_eulerian(3 + seed % 4, 2, 770'000 + seed, 4);
        if (!is_weakly_connected(g)) continue;
        auto found = find_plane_euler_embedding(g);
        if (found.answer != verdict::yes) continue;
        ++done;
        auto fs = faces(g, *found.embedding);
        for (const auto& c : enumerate_circles(g, 6)) {
            Digraph inner = subgraph_inside_circle(g, *found.embedding, fs, c, 0);
            CHECK(is_eulerian(inner));
        }
    }
}

TEST_CASE("linegraph of the 2-circle and of loops") {
    Digraph two = directed_circle(2);
    Digraph lp = linegraph_plus(two);
    CHECK(lp.n() == 4);
    CHECK(lp.m() == 4);
    CHECK(is_eulerian(lp));
    auto cover = cycle_cover(lp);
    REQUIRE(cover.size() == 1);
    CHECK(cover[0].is_circle(lp));

    Digraph loops;
    Vertex v = loops.add_vertex();
    loops.add_edge(v, v);
    loops.add_edge(v, v);
    Digraph l = linegraph(loops);
    CHECK(l.n() == 2);
    CHECK(l.m() == 2);  // the two orders of the two loops; no self-2-paths
}

TEST_CASE("linegraph_plus of 4-regular graphs is cubic") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Digraph g = random_eulerian(3 + seed % 3, 2, 880'000 + seed, 4);
        Digraph lp = linegraph_plus(g);
        for (Vertex v : lp.vertices()) CHECK(lp.degree(v) - 2 * lp.loop_count(v) <= 3);
        Digraph l = linegraph(g);
        CHECK(l.max_degree() <= 4);
        bool all4 = true;
        for (Vertex v : g.vertices())
            if (g.degree(v) != 4) all4 = false;
        if (all4)
            for (Vertex v : lp.vertices()) CHECK(lp.degree(v) == 3);
    }
}

TEST_CASE("cycles correspond to circles in the linegraph, both directions") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Digraph g = random_eulerian(2 + seed % 4, 2, 990'000 + seed, 4);
        if (g.m() > 8) continue;
        Digraph l = linegraph(g);
        // backward: every circle of l(g) reads off a cycle of g
        for (const EdgePath& k : enumerate_circles(l, 8)) {
            std::vector<Edge> seq;
            for (Edge arc : k.edges) seq.push_back(Edge{l.tail(arc).id});
            EdgePath cyc{seq, {}};
            CHECK(cyc.is_cycle(g));
        }
        // forward: consecutive pairs of every cycle of g are arcs of l(g),
        // visiting pairwise distinct linegraph vertices (a circle)
        std::vector<std::vector<Edge>> cycles;
        enumerate_cycle_sequences(g, 6, cycles);
        CHECK(!cycles.empty());
        for (const auto& seq : cycles) {
            if (seq.size() < 2) continue;  // l(bare loop) is a lone vertex
            std::set<int> distinct;
            for (Edge e : seq) CHECK(distinct.insert(e.id).second);
            for (size_t i = 0; i < seq.size(); ++i) {
                Edge a = seq[i], b = seq[(i + 1) % seq.size()];
                bool arc = false;
                for (Edge f : l.out_edges(Vertex{a.id}))
                    if (l.head(f) == Vertex{b.id}) arc = true;
                CHECK(arc);
            }
        }
    }
}
