#include "euler/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace euler {

namespace {

// vertex sequence of a cell circle in traversal order, starting at l
std::vector<Vertex> cell_corners(const EulerGrid& eg, int x, int y) {
    if (eg.cell_acw(x, y)) return {eg.l(x, y), eg.b(x, y), eg.r(x, y), eg.t(x, y)};
    return {eg.l(x, y), eg.t(x, y), eg.r(x, y), eg.b(x, y)};
}

// arc of the cell circle from corner `from` to corner `to` (following the
// cell's direction); empty when from == to
std::vector<Edge> cell_arc(const EulerGrid& eg, int x, int y, Vertex from, Vertex to) {
    auto corners = cell_corners(eg, x, y);
    const auto& es = eg.cell_edges(x, y);
    int pos = -1;
    for (int i = 0; i < 4; ++i)
        if (corners[i] == from) pos = i;
    if (pos < 0) throw input_error("cell_arc: vertex not on cell");
    std::vector<Edge> out;
    for (int step = 0; step < 4; ++step) {
        int at = (pos + step) % 4;
        if (corners[at] == to && step > 0) return out;
        out.push_back(es[at]);
    }
    if (from == to) return {};
    throw input_error("cell_arc: target not on cell");
}

// shared corner of two grid-adjacent cells
Vertex shared_corner(const EulerGrid& eg, std::pair<int, int> a, std::pair<int, int> b) {
    if (a.second == b.second && b.first == a.first + 1) return eg.r(a.first, a.second);
    if (a.second == b.second && b.first == a.first - 1) return eg.l(a.first, a.second);
    if (a.first == b.first && b.second == a.second + 1) return eg.b(a.first, a.second);
    if (a.first == b.first && b.second == a.second - 1) return eg.t(a.first, a.second);
    throw input_error("cells not adjacent");
}

// walk a corridor of grid-adjacent cells from vertex `a` (a corner of
// cells.front()) to vertex `b` (a corner of cells.back())
std::vector<Edge> corridor_walk(const EulerGrid& eg, const std::vector<std::pair<int, int>>& cells,
                                Vertex a, Vertex b) {
    std::vector<Edge> out;
    Vertex at = a;
    for (size_t i = 0; i < cells.size(); ++i) {
        Vertex exit = i + 1 < cells.size() ? shared_corner(eg, cells[i], cells[i + 1]) : b;
        auto arc = cell_arc(eg, cells[i].first, cells[i].second, at, exit);
        out.insert(out.end(), arc.begin(), arc.end());
        at = exit;
    }
    return out;
}

std::vector<std::pair<int, int>> z_corridor(std::pair<int, int> from, std::pair<int, int> to,
                                            int mid, bool horizontal) {
    // cells strictly between `from` and `to`, bending at coordinate `mid`
    std::vector<std::pair<int, int>> cells;
    if (horizontal) {
        for (int x = from.first + 1; x <= mid; ++x) cells.push_back({x, from.second});
        int step = to.second > from.second ? 1 : -1;
        for (int y = from.second + step; y != to.second + step; y += step)
            if (y != from.second) cells.push_back({mid, y});
        for (int x = mid + 1; x <= to.first - 1; ++x) cells.push_back({x, to.second});
    } else {
        for (int y = from.second + 1; y <= mid; ++y) cells.push_back({from.first, y});
        int step = to.first > from.first ? 1 : -1;
        for (int x = from.first + step; x != to.first + step; x += step)
            if (x != from.first) cells.push_back({x, mid});
        for (int y = mid + 1; y <= to.second - 1; ++y) cells.push_back({to.first, y});
    }
    return cells;
}

}  // namespace

ImmersionModel swirl_into_eulergrid(int k, const GridOrientation& o) {
    if (k < 1) throw input_error("swirl_into_eulergrid requires k >= 1");
    const int K = 2 * k * k;
    EulerGrid host = euler_grid(K, K, o);
    EulerGrid guest = swirl(k, k);
    ImmersionModel m;
    m.guest = guest.graph;
    m.host = host.graph;
    m.strong = true;

    // square (I,J) spans cells [(I-1)k+1 .. Ik] x [(J-1)k+1 .. Jk]
    auto square_uniform = [&](int I, int J) -> std::optional<bool> {
        bool first = host.cell_acw((I - 1) * k + 1, (J - 1) * k + 1);
        for (int x = (I - 1) * k + 1; x <= I * k; ++x)
            for (int y = (J - 1) * k + 1; y <= J * k; ++y)
                if (host.cell_acw(x, y) != first) return std::nullopt;
        return first;
    };

    for (int I = 1; I <= 2 * k; ++I) {
        for (int J = 1; J <= 2 * k; ++J) {
            auto uni = square_uniform(I, J);
            if (!uni) continue;
            int bx = (I - 1) * k, by = (J - 1) * k;
            bool acw = *uni;
            for (int i = 1; i <= k; ++i) {
                for (int j = 1; j <= k; ++j) {
                    int hx = acw ? bx + i : bx + (k + 1 - i);
                    int hy = by + j;
                    const auto& ge = guest.cell_edges(i, j);
                    const auto& he = host.cell_edges(hx, hy);
                    if (acw) {
                        m.vmap[guest.l(i, j)] = host.l(hx, hy);
                        m.vmap[guest.r(i, j)] = host.r(hx, hy);
                        m.vmap[guest.t(i, j)] = host.t(hx, hy);
                        m.vmap[guest.b(i, j)] = host.b(hx, hy);
                        for (int t = 0; t < 4; ++t) m.emap[ge[t]] = EdgePath{{he[t]}, {}};
                    } else {
                        // reflect left-right; guest acw edges land on cw edges
                        m.vmap[guest.l(i, j)] = host.r(hx, hy);
                        m.vmap[guest.r(i, j)] = host.l(hx, hy);
                        m.vmap[guest.t(i, j)] = host.t(hx, hy);
                        m.vmap[guest.b(i, j)] = host.b(hx, hy);
                        // guest (l->b),(b->r),(r->t),(t->l) onto host
                        // (r->b),(b->l),(l->t),(t->r)
                        m.emap[ge[0]] = EdgePath{{he[2]}, {}};
                        m.emap[ge[1]] = EdgePath{{he[3]}, {}};
                        m.emap[ge[2]] = EdgePath{{he[0]}, {}};
                        m.emap[ge[3]] = EdgePath{{he[1]}, {}};
                    }
                }
            }
            auto chk = validate_model(m);
            if (!chk.ok) throw std::logic_error("swirl_into_eulergrid: uniform square model invalid: " + chk.violated);
            return m;
        }
    }

    // mixed case: every square holds an anti-clockwise cell; pick the
    // lexicographically smallest one in each odd-indexed square
    std::vector<std::vector<std::pair<int, int>>> chosen(k + 1, std::vector<std::pair<int, int>>(k + 1));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            int I = 2 * i - 1, J = 2 * j - 1;
            std::pair<int, int> pick{-1, -1};
            for (int x = (I - 1) * k + 1; x <= I * k && pick.first < 0; ++x)
                for (int y = (J - 1) * k + 1; y <= J * k; ++y)
                    if (host.cell_acw(x, y)) {
                        pick = {x, y};
                        break;
                    }
            if (pick.first < 0) throw std::logic_error("mixed square without anti-clockwise cell");
            chosen[i][j] = pick;
        }
    }

    auto O = [&](int i, int j) { return chosen[i][j]; };
    // connector paths
    std::map<std::pair<int, int>, std::vector<Edge>> R, L, D, U;  // keyed by (i,j)
    for (int j = 1; j <= k; ++j) {
        for (int i = 1; i < k; ++i) {
            auto from = O(i, j), to = O(i + 1, j);
            int mid = (2 * i - 1) * k + (k + 1) / 2;
            auto cells = z_corridor(from, to, mid, true);
            Vertex a = host.r(from.first, from.second);
            Vertex b = host.l(to.first, to.second);
            R[{i, j}] = corridor_walk(host, cells, a, b);
            std::reverse(cells.begin(), cells.end());
            L[{i, j}] = corridor_walk(host, cells, b, a);
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j < k; ++j) {
            auto from = O(i, j), to = O(i, j + 1);
            int mid = (2 * j - 1) * k + (k + 1) / 2;
            auto cells = z_corridor(from, to, mid, false);
            Vertex a = host.b(from.first, from.second);
            Vertex b = host.t(to.first, to.second);
            D[{i, j}] = corridor_walk(host, cells, a, b);
            std::reverse(cells.begin(), cells.end());
            U[{i, j}] = corridor_walk(host, cells, b, a);
        }
    }

    auto hcell = [&](int i, int j) { return O(i, j); };
    auto hedge = [&](int i, int j, int t) {
        auto [x, y] = hcell(i, j);
        return host.cell_edges(x, y)[t];  // acw cell: 0=(l,b) 1=(b,r) 2=(r,t) 3=(t,l)
    };
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            auto [x, y] = hcell(i, j);
            m.vmap[guest.t(i, j)] = host.t(x, y);
            m.vmap[guest.r(i, j)] = host.r(x, y);
            if (i == 1) m.vmap[guest.l(1, j)] = host.l(x, y);
            if (j == k) m.vmap[guest.b(i, k)] = host.b(x, y);
            const auto& ge = guest.cell_edges(i, j);
            // (t -> l): own edge, then back along L to the previous cell
            {
                std::vector<Edge> p{hedge(i, j, 3)};
                if (i > 1) {
                    auto& l = L.at({i - 1, j});
                    p.insert(p.end(), l.begin(), l.end());
                }
                m.emap[ge[3]] = EdgePath{p, {}};
            }
            // (l -> b): arrive along R, own edge, descend along D
            {
                std::vector<Edge> p;
                if (i > 1) p = R.at({i - 1, j});
                p.push_back(hedge(i, j, 0));
                if (j < k) {
                    auto& d = D.at({i, j});
                    p.insert(p.end(), d.begin(), d.end());
                }
                m.emap[ge[0]] = EdgePath{p, {}};
            }
            // (b -> r): rise along U, own edge
            {
                std::vector<Edge> p;
                if (j < k) p = U.at({i, j});
                p.push_back(hedge(i, j, 1));
                m.emap[ge[1]] = EdgePath{p, {}};
            }
            // (r -> t): own edge
            m.emap[ge[2]] = EdgePath{{hedge(i, j, 2)}, {}};
        }
    }
    auto chk = validate_model(m);
    if (!chk.ok) throw std::logic_error("swirl_into_eulergrid: model invalid: " + chk.violated);
    return m;
}

namespace {

// segment of a directed circle from vertex a to vertex b (possibly empty)
std::vector<Edge> circle_segment(const Digraph& g, const EdgePath& circle, Vertex a, Vertex b) {
    int n = circle.length();
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (g.tail(circle.edges[i]) == a) start = i;
    if (start < 0) throw input_error("circle_segment: start not on circle");
    std::vector<Edge> out;
    for (int step = 0; step < n; ++step) {
        int at = (start + step) % n;
        if (g.tail(circle.edges[at]) == b && step > 0) return out;
        if (a == b && step == 0) return {};
        out.push_back(circle.edges[at]);
    }
    if (a == b) return {};
    throw input_error("circle_segment: target not on circle");
}

Vertex circle_meet(const Digraph& g, const EdgePath& c1, const EdgePath& c2) {
    std::unordered_set<int> v1;
    for (Edge e : c1.edges) v1.insert(g.tail(e).id);
    for (Edge e : c2.edges)
        if (v1.count(g.tail(e).id)) return g.tail(e);
    throw input_error("circles do not meet");
}

}  // namespace

RouterImmersion into_router(const Digraph& g) {
    if (!is_eulerian(g)) throw input_error("into_router requires an Eulerian digraph");
    if (g.max_degree() > 4)
        throw input_error("into_router: no router admits a vertex of degree above 4");
    int n = g.n();
    RouterImmersion out{.model = {}, .host = router(std::max(2, 6 * n))};
    const Router& rt = out.host;
    ImmersionModel& m = out.model;
    m.guest = g;
    m.host = rt.graph;
    m.strong = true;
    if (n == 0) return out;

    std::vector<Vertex> vs = g.vertices();
    // per vertex bookkeeping
    struct Gadget {
        Vertex hub;                       // u_i
        EdgeMap<int> slot;                // incident guest edge end -> circle index (1-based)
        // separate maps for out- and in- ends so loops occupy two slots
        EdgeMap<int> out_slot, in_slot;
        EdgeMap<std::vector<Edge>> out_port, in_port;  // port paths
        EdgeMap<Vertex> out_port_v, in_port_v;
    };
    std::vector<Gadget> gadgets(n);

    auto circ = [&](int i, int j) -> const EdgePath& { return rt.circles[6 * i + j - 1]; };

    for (int i = 0; i < n; ++i) {
        Vertex v = vs[i];
        Gadget& gd = gadgets[i];
        const EdgePath& top = circ(i, 5);
        const EdgePath& bot = circ(i, 6);
        gd.hub = circle_meet(rt.graph, top, bot);
        // slots in the order out, in, out, in over the incident edge ends
        std::vector<std::pair<Edge, bool>> ends;  // (edge, is_out)
        {
            std::vector<Edge> outs = g.out_edges(v), ins = g.in_edges(v);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            size_t a = 0, b = 0;
            while (a < outs.size() || b < ins.size()) {
                if (a < outs.size()) ends.push_back({outs[a++], true});
                if (b < ins.size()) ends.push_back({ins[b++], false});
            }
        }
        // walk the top circle from the hub; first two in-group hits serve
        // slots 1 and 2, the bottom circle serves slots 3 and 4
        std::set<int> used_j;
        auto assign_from_circle = [&](const EdgePath& c, std::vector<int> slots_here) {
            int found = 0;
            int len = c.length();
            int start = -1;
            for (int p = 0; p < len; ++p)
                if (rt.graph.tail(c.edges[p]) == gd.hub) start = p;
            for (int step = 1; step < len && found < (int)slots_here.size(); ++step) {
                Vertex w = rt.graph.tail(c.edges[(start + step) % len]);
                // which in-group circle owns w?
                for (int j = 1; j <= 4; ++j) {
                    if (used_j.count(j)) continue;
                    const EdgePath& cj = circ(i, j);
                    bool on = false;
                    for (Edge e : cj.edges)
                        if (rt.graph.tail(e) == w) on = true;
                    if (!on) continue;
                    int slotidx = slots_here[found];
                    if (slotidx >= (int)ends.size()) {
                        ++found;
                        used_j.insert(j);
                        break;
                    }
                    auto [ge, is_out] = ends[slotidx];
                    if (is_out) {
                        gd.out_slot[ge] = j;
                        gd.out_port_v[ge] = w;
                        gd.out_port[ge] = circle_segment(rt.graph, c, gd.hub, w);
                    } else {
                        gd.in_slot[ge] = j;
                        gd.in_port_v[ge] = w;
                        gd.in_port[ge] = circle_segment(rt.graph, c, w, gd.hub);
                    }
                    used_j.insert(j);
                    ++found;
                    break;
                }
            }
            if (found < (int)slots_here.size())
                throw std::logic_error("into_router: circle walk found too few ports");
        };
        assign_from_circle(top, {0, 1});
        assign_from_circle(bot, {2, 3});
        m.vmap[v] = gd.hub;
    }
    VertexMap<int> index;
    for (int i = 0; i < n; ++i) index[vs[i]] = i;

    for (Edge e : g.edges()) {
        int i = index.at(g.tail(e));
        int j = index.at(g.head(e));
        Gadget& gi = gadgets[i];
        Gadget& gj = gadgets[j];
        int ci = gi.out_slot.at(e);
        int cj = gj.in_slot.at(e);
        const EdgePath& outc = circ(i, ci);
        const EdgePath& inc = circ(j, cj);
        Vertex meet = circle_meet(rt.graph, outc, inc);
        std::vector<Edge> p = gi.out_port.at(e);
        auto s1 = circle_segment(rt.graph, outc, gi.out_port_v.at(e), meet);
        auto s2 = circle_segment(rt.graph, inc, meet, gj.in_port_v.at(e));
        p.insert(p.end(), s1.begin(), s1.end());
        p.insert(p.end(), s2.begin(), s2.end());
        const auto& back = gj.in_port.at(e);
        p.insert(p.end(), back.begin(), back.end());
        m.emap[e] = EdgePath{p, {}};
    }
    auto chk = validate_model(m);
    if (!chk.ok) throw std::logic_error("into_router: model invalid: " + chk.violated);
    return out;
}

DegreeReduction reduce_degree6(const Digraph& g) {
    if (!is_eulerian(g)) throw input_error("reduce_degree6 requires an Eulerian digraph");
    for (Vertex v : g.vertices()) {
        int d = g.degree(v);
        if (d != 0 && d != 2 && d != 4 && d != 6)
            throw input_error("reduce_degree6: vertex degrees must lie in {2,4,6}");
        if (d == 6 && g.loop_count(v) > 0)
            throw input_error("reduce_degree6: loops at a degree-6 vertex make the port assignment ambiguous");
    }
    DegreeReduction res;
    res.graph = g;
    for (Vertex v : std::vector<Vertex>(g.vertices())) {
        if (g.degree(v) != 6) continue;
        Digraph& h = res.graph;
        std::vector<Edge> ins = h.in_edges(v), outs = h.out_edges(v);
        std::sort(ins.begin(), ins.end());
        std::sort(outs.begin(), outs.end());
        // fresh copy of the fence, ids shifted past everything present
        Fence3 f = fence3();
        VertexMap<Vertex> rename;
        FenceReplacement rep;
        rep.original = v;
        for (Vertex w : f.graph.vertices()) {
            Vertex nw = h.add_vertex(h.fresh_vertex_id());
            rename[w] = nw;
            rep.gadget_vertices.push_back(nw);
        }
        for (Edge e : f.graph.edges())
            h.add_edge(h.fresh_edge_id(), rename.at(f.graph.tail(e)), rename.at(f.graph.head(e)));
        for (Vertex s : f.s) rep.s.push_back(rename.at(s));
        for (Vertex t : f.t) rep.t.push_back(rename.at(t));
        // reattach: in-edges to the s ports, out-edges from the t ports
        for (int idx = 0; idx < 3; ++idx) {
            Edge e = ins[idx];
            Vertex tail = h.tail(e);
            h.remove_edge(e);
            h.add_edge(e, tail, rep.s[idx]);
            Edge e2 = outs[idx];
            Vertex head = h.head(e2);
            h.remove_edge(e2);
            h.add_edge(e2, rep.t[idx], head);
        }
        h.remove_vertex(v);
        res.gadgets.push_back(std::move(rep));
    }
    if (!is_eulerian(res.graph) || res.graph.max_degree() > 4)
        throw std::logic_error("reduce_degree6: reduction broke the degree contract");
    return res;
}

}  // namespace euler
