#include "euler/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "euler/canonical.hpp"

namespace euler {

bool GridOrientation::anticlockwise(int x, int y) const {
    switch (kind) {
        case Kind::all_same: return true;
        case Kind::checkerboard: return (x + y) % 2 == 0;
        case Kind::explicit_bitmap:
            if (x < 1 || y < 1 || x > (int)bitmap.size() || y > (int)bitmap[x - 1].size())
                throw input_error("orientation bitmap does not cover cell");
            return bitmap[x - 1][y - 1];
    }
    return true;
}

// Coordinates: x grows to the right, y grows upward. Cell corners sit at
// compass positions l=W, t=N, r=E, b=S; anti-clockwise traversal from l is
// l -> b -> r -> t -> l.
EulerGrid euler_grid(int k, int n, const GridOrientation& o) {
    if (k < 1 || n < 1) throw input_error("euler_grid requires k,n >= 1");
    if (o.kind == GridOrientation::Kind::explicit_bitmap &&
        ((int)o.bitmap.size() != k || (int)o.bitmap[0].size() != n))
        throw input_error("orientation bitmap dimensions must match (k,n)");
    EulerGrid eg;
    eg.k = k;
    eg.n = n;
    // vertical boundary vertices vb(x,y), x in 0..k, y in 1..n
    // horizontal boundary vertices hb(x,y), x in 1..k, y in 0..n
    std::vector<std::vector<Vertex>> vb(k + 1, std::vector<Vertex>(n));
    std::vector<std::vector<Vertex>> hb(k, std::vector<Vertex>(n + 1));
    for (int x = 0; x <= k; ++x)
        for (int y = 0; y < n; ++y) vb[x][y] = eg.graph.add_vertex();
    for (int x = 0; x < k; ++x)
        for (int y = 0; y <= n; ++y) hb[x][y] = eg.graph.add_vertex();
    eg.left.assign(k, std::vector<Vertex>(n));
    eg.right.assign(k, std::vector<Vertex>(n));
    eg.top.assign(k, std::vector<Vertex>(n));
    eg.bottom.assign(k, std::vector<Vertex>(n));
    eg.acw.assign(k, std::vector<bool>(n));
    eg.cell_e.assign(k, std::vector<std::vector<Edge>>(n));
    for (int x = 1; x <= k; ++x) {
        for (int y = 1; y <= n; ++y) {
            Vertex l = vb[x - 1][y - 1];
            Vertex r = vb[x][y - 1];
            Vertex t = hb[x - 1][y - 1];
            Vertex b = hb[x - 1][y];
            eg.left[x - 1][y - 1] = l;
            eg.right[x - 1][y - 1] = r;
            eg.top[x - 1][y - 1] = t;
            eg.bottom[x - 1][y - 1] = b;
            bool acw = o.anticlockwise(x, y);
            eg.acw[x - 1][y - 1] = acw;
            auto& es = eg.cell_e[x - 1][y - 1];
            if (acw) {
                es.push_back(eg.graph.add_edge(l, b));
                es.push_back(eg.graph.add_edge(b, r));
                es.push_back(eg.graph.add_edge(r, t));
                es.push_back(eg.graph.add_edge(t, l));
            } else {
                es.push_back(eg.graph.add_edge(l, t));
                es.push_back(eg.graph.add_edge(t, r));
                es.push_back(eg.graph.add_edge(r, b));
                es.push_back(eg.graph.add_edge(b, l));
            }
        }
    }
    return eg;
}

Router router(int k) {
    if (k < 2) throw input_error("router requires k >= 2");
    Router rt;
    rt.k = k;
    rt.meet.assign(k, std::vector<Vertex>(k, Vertex{-1}));
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            Vertex v = rt.graph.add_vertex();
            rt.meet[i - 1][j - 1] = v;
            rt.meet[j - 1][i - 1] = v;
        }
    for (int i = 1; i <= k; ++i) {
        std::vector<Vertex> stops;
        for (int j = 1; j <= k; ++j)
            if (j != i) stops.push_back(rt.meeting(i, j));
        EdgePath c;
        for (size_t a = 0; a < stops.size(); ++a) {
            Vertex from = stops[a];
            Vertex to = stops[(a + 1) % stops.size()];
            c.edges.push_back(rt.graph.add_edge(from, to));
        }
        rt.circles.push_back(std::move(c));
    }
    return rt;
}

Digraph antichain_member(int k, bool eulerianize) {
    if (k < 1) throw input_error("antichain_member requires k >= 1");
    Digraph g;
    Vertex l1 = g.add_vertex(AntichainIds::l1());
    Vertex l2 = g.add_vertex(AntichainIds::l2());
    Vertex r1 = g.add_vertex(AntichainIds::r1());
    Vertex r2 = g.add_vertex(AntichainIds::r2());
    for (int i = 0; i <= 2 * k; ++i) g.add_vertex(AntichainIds::v(i));
    auto v = [&](int i) { return AntichainIds::v(i); };
    g.add_edge(l1, v(0));
    g.add_edge(l2, v(0));
    g.add_edge(v(0), v(1));
    for (int i = 1; i < k; ++i) {
        g.add_edge(v(2 * i), v(2 * i - 1));
        g.add_edge(v(2 * i), v(2 * i + 1));
    }
    g.add_edge(v(2 * k), v(2 * k - 1));
    g.add_edge(v(2 * k), r1);
    g.add_edge(v(2 * k), r2);
    if (!eulerianize) return g;

    Vertex b = g.add_vertex(AntichainIds::bead(k));
    std::vector<Edge> bead_edges;
    for (Vertex u : std::vector<Vertex>(g.vertices())) {
        if (u == b) continue;
        int surplus = g.in_degree(u) - g.out_degree(u);
        for (int i = 0; i < surplus; ++i) bead_edges.push_back(g.add_edge(u, b));
        for (int i = 0; i < -surplus; ++i) bead_edges.push_back(g.add_edge(b, u));
    }
    // subdivide every parallel bead edge beyond the first, once, by edge id
    std::map<std::pair<int, int>, std::vector<Edge>> groups;
    for (Edge e : bead_edges) groups[{g.tail(e).id, g.head(e).id}].push_back(e);
    for (auto& [ends, es] : groups) {
        std::sort(es.begin(), es.end());
        for (size_t i = 1; i < es.size(); ++i) {
            Vertex t = g.tail(es[i]), h = g.head(es[i]);
            g.remove_edge(es[i]);
            Vertex z = g.add_vertex();
            g.add_edge(t, z);
            g.add_edge(z, h);
        }
    }
    return g;
}

Fence3 fence3() {
    Fence3 f;
    for (int j = 0; j < 3; ++j) f.s.push_back(f.graph.add_vertex());
    for (int j = 0; j < 3; ++j) f.t.push_back(f.graph.add_vertex());
    Vertex vv[4][4];
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) vv[i][j] = f.graph.add_vertex();
    for (int i = 1; i <= 3; ++i) {
        f.graph.add_edge(vv[i][1], vv[i][2]);
        f.graph.add_edge(vv[i][2], vv[i][3]);
        f.graph.add_edge(vv[i][3], vv[i][1]);
    }
    for (int j = 1; j <= 3; ++j) {
        f.graph.add_edge(vv[1][j], vv[2][j]);
        f.graph.add_edge(vv[2][j], vv[3][j]);
        f.graph.add_edge(f.s[j - 1], vv[1][j]);
        f.graph.add_edge(vv[3][j], f.t[j - 1]);
    }
    return f;
}

UndirectedGraph undirected_grid(int n, int m) {
    if (n < 1 || m < 1) throw input_error("undirected_grid requires n,m >= 1");
    UndirectedGraph g;
    std::vector<std::vector<Vertex>> v(n, std::vector<Vertex>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) v[i][j] = g.add_vertex();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            if (i + 1 < n) g.add_edge(v[i][j], v[i + 1][j]);
            if (j + 1 < m) g.add_edge(v[i][j], v[i][j + 1]);
        }
    return g;
}

Digraph random_eulerian(int n, int cycles, std::uint64_t seed, std::optional<int> max_degree) {
    if (n < 1) throw input_error("random_eulerian requires n >= 1");
    std::mt19937_64 rng(seed);
    const int attempts = 500;
    for (int a = 0; a < attempts; ++a) {
        Digraph g;
        for (int i = 0; i < n; ++i) g.add_vertex();
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int c = 0; c < cycles; ++c) {
            int len = 2 + (int)(rng() % (std::uint64_t)std::max(1, n));
            std::vector<Vertex> walk;
            for (int i = 0; i < len; ++i) walk.push_back(Vertex{pick(rng)});
            for (int i = 0; i < len; ++i) g.add_edge(walk[i], walk[(i + 1) % len]);
        }
        if (!max_degree || g.max_degree() <= *max_degree) return g;
    }
    throw input_error("random_eulerian: degree bound unsatisfiable within retry budget");
}

namespace {

struct EnumCtx {
    int n, max_m, max_deg, max_mult;
    std::vector<std::vector<int>> cnt;
    int total = 0;
    std::set<std::string> seen;
    std::vector<Digraph> out;

    void emit() {
        std::vector<int> in(n, 0), outd(n, 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                outd[u] += cnt[u][v];
                in[v] += cnt[u][v];
            }
        for (int u = 0; u < n; ++u) {
            if (in[u] != outd[u]) return;
            if (in[u] + outd[u] == 0) return;  // covered by smaller n
            if (in[u] + outd[u] > max_deg) return;
        }
        Digraph g;
        for (int u = 0; u < n; ++u) g.add_vertex();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int c = 0; c < cnt[u][v]; ++c) g.add_edge(Vertex{u}, Vertex{v});
        std::string code = canonical_form(g);
        if (seen.insert(code).second) out.push_back(std::move(g));
    }

    void rec(int cell) {
        if (cell == n * n) {
            emit();
            return;
        }
        int u = cell / n, v = cell % n;
        for (int c = 0; c <= max_mult; ++c) {
            if (total + c > max_m) break;
            cnt[u][v] = c;
            total += c;
            rec(cell + 1);
            total -= c;
            cnt[u][v] = 0;
        }
    }
};

}  // namespace

std::vector<Digraph> enumerate_eulerian(int max_n, int max_m, int max_deg, int max_mult) {
    std::vector<Digraph> all;
    std::set<std::string> seen;
    for (int n = 1; n <= max_n; ++n) {
        EnumCtx ctx;
        ctx.n = n;
        ctx.max_m = max_m;
        ctx.max_deg = max_deg;
        ctx.max_mult = max_mult;
        ctx.cnt.assign(n, std::vector<int>(n, 0));
        ctx.seen = std::move(seen);
        ctx.rec(0);
        seen = std::move(ctx.seen);
        for (auto& g : ctx.out) all.push_back(std::move(g));
    }
    return all;
}

}  // namespace euler
