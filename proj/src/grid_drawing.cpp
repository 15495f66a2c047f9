#include "euler/grid_drawing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace euler {

void GridLayout::mirror_x() {
    for (auto& [v, p] : position) p.x = width + 1 - p.x;
    for (auto& [e, pts] : edge_path)
        for (auto& p : pts) p.x = width + 1 - p.x;
}

namespace {

// working copy of the graph plus rotation, supporting subdivision, chord
// insertion and chain bookkeeping
struct Working {
    Digraph g;
    RotationEmbedding rot;
    EdgeMap<std::vector<Edge>> replaced_by;  // edge -> directed chain of fragments
    EdgeMap<bool> virtual_edge;

    // subdivide e into (tail -> w -> head); fragments keep e's direction
    Vertex subdivide(Edge e) {
        Vertex a = g.tail(e), b = g.head(e);
        Vertex w = g.add_vertex(g.fresh_vertex_id());
        Edge f1 = g.fresh_edge_id();
        g.add_edge(f1, a, w);
        Edge f2 = g.fresh_edge_id();
        g.add_edge(f2, w, b);
        // rotation: w sees (f1 head-end, f2 tail-end); a and b swap ends
        for (auto& end : rot.rotation.at(a))
            if (end == EdgeEnd{e, false}) end = EdgeEnd{f1, false};
        for (auto& end : rot.rotation.at(b))
            if (end == EdgeEnd{e, true}) end = EdgeEnd{f2, true};
        rot.rotation[w] = {{f1, true}, {f2, false}};
        g.remove_edge(e);
        replaced_by[e] = {f1, f2};
        return w;
    }

    // insert a chord (u,v) inside face `orbit`; u and v must appear as
    // arrival vertices of darts on the orbit
    Edge insert_chord(const std::vector<Dart>& orbit, Vertex u, Vertex v) {
        Edge f = g.fresh_edge_id();
        auto arrival_end = [&](Vertex at) -> EdgeEnd {
            for (Dart d : orbit) {
                Vertex arr = d.forward ? g.head(d.e) : g.tail(d.e);
                if (arr == at) return EdgeEnd{d.e, d.forward};
            }
            throw input_error("chord endpoint not on face");
        };
        EdgeEnd au = arrival_end(u);
        EdgeEnd av = arrival_end(v);
        g.add_edge(f, u, v);
        auto insert_after = [&](Vertex at, EdgeEnd pos, EdgeEnd put) {
            auto& ends = rot.rotation.at(at);
            for (size_t i = 0; i < ends.size(); ++i)
                if (ends[i] == pos) {
                    ends.insert(ends.begin() + (long)i + 1, put);
                    return;
                }
            throw input_error("rotation end missing");
        };
        insert_after(u, au, EdgeEnd{f, false});
        insert_after(v, av, EdgeEnd{f, true});
        virtual_edge[f] = true;
        return f;
    }

    std::vector<Edge> resolve(Edge e) const {
        auto it = replaced_by.find(e);
        if (it == replaced_by.end()) return {e};
        std::vector<Edge> out;
        for (Edge f : it->second) {
            auto sub = resolve(f);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
};

// blocks via DFS lowpoints; returns per-edge block index
EdgeMap<int> block_of_edges(const Digraph& g) {
    EdgeMap<int> block;
    VertexMap<int> num, low;
    int counter = 0, nblocks = 0;
    std::vector<Edge> stack;
    std::function<void(Vertex, Edge)> dfs = [&](Vertex v, Edge via) {
        num[v] = ++counter;
        low[v] = num[v];
        auto explore = [&](Edge e, Vertex w) {
            if (e == via) return;
            if (!num.count(w)) {
                stack.push_back(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    // pop a block
                    while (true) {
                        Edge top = stack.back();
                        stack.pop_back();
                        block[top] = nblocks;
                        if (top == e) break;
                    }
                    ++nblocks;
                }
            } else if (num[w] < num[v]) {
                stack.push_back(e);
                low[v] = std::min(low[v], num[w]);
            }
        };
        for (Edge e : g.out_edges(v))
            if (!block.count(e)) explore(e, g.head(e));
        for (Edge e : g.in_edges(v))
            if (!block.count(e) && !g.is_loop(e)) explore(e, g.tail(e));
    };
    for (Vertex v : g.vertices())
        if (!num.count(v) && g.degree(v) > 0) dfs(v, Edge{-1});
    return block;
}

struct StNumbering {
    VertexMap<int> num;  // 1..n
    bool valid(const Digraph& g, Vertex s, Vertex t) const {
        if (num.at(s) != 1 || num.at(t) != g.n()) return false;
        for (Vertex v : g.vertices()) {
            if (v == s || v == t) continue;
            bool lower = false, higher = false;
            for (Edge e : g.out_edges(v)) {
                int o = num.at(g.head(e));
                lower |= o < num.at(v);
                higher |= o > num.at(v);
            }
            for (Edge e : g.in_edges(v)) {
                int o = num.at(g.tail(e));
                lower |= o < num.at(v);
                higher |= o > num.at(v);
            }
            if (!lower || !higher) return false;
        }
        return true;
    }
};

// Tarjan's streamlined st-numbering; verified afterwards, with a brute-force
// fallback for tiny graphs
StNumbering st_number(const Digraph& g, Vertex s, Vertex t, Edge est) {
    VertexMap<int> pre;
    VertexMap<Vertex> lowv, parent;
    std::vector<Vertex> preorder;
    int counter = 0;
    std::function<void(Vertex, Edge)> dfs = [&](Vertex v, Edge via) {
        pre[v] = ++counter;
        lowv[v] = v;
        preorder.push_back(v);
        auto lower = [&](Vertex a, Vertex b) { return pre.at(a) < pre.at(b) ? a : b; };
        auto explore = [&](Edge e, Vertex w) {
            if (e == via) return;
            if (!pre.count(w)) {
                parent[w] = v;
                dfs(w, e);
                lowv[v] = lower(lowv[v], lowv[w]);
            } else {
                lowv[v] = lower(lowv[v], w);
            }
        };
        if (v == s) {
            // force the tree edge (s, t) first
            Vertex w = g.tail(est) == s ? g.head(est) : g.tail(est);
            parent[w] = v;
            pre[w];  // ensure order
            dfs(w, est);
            lowv[v] = lower(lowv[v], lowv[w]);
        }
        for (Edge e : g.out_edges(v)) explore(e, g.head(e));
        for (Edge e : g.in_edges(v))
            if (!g.is_loop(e)) explore(e, g.tail(e));
    };
    dfs(s, Edge{-1});

    StNumbering res;
    if ((int)pre.size() == g.n()) {
        std::deque<Vertex> order{s, t};
        VertexMap<int> sign;  // -1 minus, +1 plus
        sign[s] = -1;
        for (Vertex w : preorder) {
            if (w == s || w == t) continue;
            Vertex p = parent.at(w);
            auto it_p = std::find(order.begin(), order.end(), p);
            if (sign.count(lowv.at(w)) && sign.at(lowv.at(w)) == -1) {
                order.insert(it_p, w);
                sign[p] = 1;
            } else {
                order.insert(std::next(it_p), w);
                sign[p] = -1;
            }
        }
        int n = 0;
        for (Vertex v : order) res.num[v] = ++n;
        if (res.valid(g, s, t)) return res;
    }
    // brute-force fallback, feasible for tiny graphs only
    if (g.n() > 10) throw std::logic_error("st-numbering failed on a large graph");
    std::vector<Vertex> mids;
    for (Vertex v : g.vertices())
        if (!(v == s) && !(v == t)) mids.push_back(v);
    std::sort(mids.begin(), mids.end());
    do {
        StNumbering cand;
        cand.num[s] = 1;
        int k = 2;
        for (Vertex v : mids) cand.num[v] = k++;
        cand.num[t] = k;
        if (cand.valid(g, s, t)) return cand;
    } while (std::next_permutation(mids.begin(), mids.end()));
    throw std::logic_error("no st-numbering found");
}

}  // namespace

GridLayout orthogonal_layout(const Digraph& h, const RotationEmbedding& rot0) {
    for (Edge e : h.edges())
        if (h.is_loop(e)) throw input_error("orthogonal_layout: loops unsupported");
    if (h.m() == 0) throw input_error("orthogonal_layout needs at least one edge");
    {
        std::string why;
        if (!valid_rotation(h, rot0, &why)) throw input_error("orthogonal_layout: " + why);
    }
    Working w{h, rot0, {}, {}};

    // subdivide parallel edges (undirected sense) down to simple
    {
        std::map<std::pair<int, int>, std::vector<Edge>> classes;
        for (Edge e : w.g.edges()) {
            int a = std::min(w.g.tail(e).id, w.g.head(e).id);
            int b = std::max(w.g.tail(e).id, w.g.head(e).id);
            classes[{a, b}].push_back(e);
        }
        for (auto& [ab, es] : classes)
            for (size_t i = 1; i < es.size(); ++i) w.subdivide(es[i]);
    }

    // choose s and t: double-subdivide the first edge so they cannot be
    // adjacent, then chord them through a shared face
    Edge first = w.g.edges()[0];
    Vertex s = w.g.tail(first);
    Vertex w1 = w.subdivide(first);
    Edge second_half = w.replaced_by.at(first)[1];
    Vertex t = w.subdivide(second_half);
    (void)w1;

    Edge est{-1};
    {
        FaceStructure fs = faces(w.g, w.rot);
        int fidx = -1;
        for (int i = 0; i < (int)fs.faces.size() && fidx < 0; ++i) {
            bool has_s = false, has_t = false;
            for (Dart d : fs.faces[i]) {
                Vertex arr = d.forward ? w.g.head(d.e) : w.g.tail(d.e);
                has_s |= arr == s;
                has_t |= arr == t;
            }
            if (has_s && has_t) fidx = i;
        }
        if (fidx < 0) throw std::logic_error("s and t share no face");
        est = w.insert_chord(fs.faces[fidx], s, t);
    }
    if (!(w.g.tail(est) == s)) throw std::logic_error("chord orientation unexpected");

    // biconnect with chords until one block remains
    while (true) {
        auto block = block_of_edges(w.g);
        int nb = 0;
        for (auto& [e, b] : block) nb = std::max(nb, b + 1);
        if (nb <= 1) break;
        // find a vertex with two rotation-consecutive ends in distinct blocks
        bool done = false;
        FaceStructure fs = faces(w.g, w.rot);
        for (Vertex v : w.g.vertices()) {
            const auto& ends = w.rot.rotation.at(v);
            for (size_t i = 0; i < ends.size() && !done; ++i) {
                EdgeEnd e1 = ends[i];
                EdgeEnd e2 = ends[(i + 1) % ends.size()];
                if (block.at(e1.e) == block.at(e2.e)) continue;
                // far endpoints across the face corner at v
                Vertex u = e1.at_head ? w.g.tail(e1.e) : w.g.head(e1.e);
                Vertex x = e2.at_head ? w.g.tail(e2.e) : w.g.head(e2.e);
                // the face holding this corner: arrive along e1 into v
                Dart arrive{e1.e, !e1.at_head ? false : true};
                // dart arriving at v via e1: forward iff v is the head
                arrive = Dart{e1.e, e1.at_head};
                int f = fs.face_of(arrive);
                w.insert_chord(fs.faces[f], u, x);
                done = true;
            }
            if (done) break;
        }
        if (!done) throw std::logic_error("biconnection found no mergeable corner");
    }

    // st-number and orient low -> high
    StNumbering st = st_number(w.g, s, t, est);
    auto yof = [&](Vertex v) { return st.num.at(v); };
    // edge st-direction: from lower to higher number
    auto st_tail = [&](Edge e) {
        return yof(w.g.tail(e)) < yof(w.g.head(e)) ? w.g.tail(e) : w.g.head(e);
    };

    // longest path layering from s along st-arcs
    VertexMap<int> yrow;
    {
        std::vector<Vertex> order = w.g.vertices();
        std::sort(order.begin(), order.end(),
                  [&](Vertex a, Vertex b) { return yof(a) < yof(b); });
        for (Vertex v : order) yrow[v] = 0;
        for (Vertex v : order) {
            auto relax = [&](Edge e) {
                Vertex a = st_tail(e);
                Vertex b = a == w.g.tail(e) ? w.g.head(e) : w.g.tail(e);
                if (a == v) yrow[b] = std::max(yrow[b], yrow[v] + 1);
            };
            for (Edge e : w.g.out_edges(v)) relax(e);
            for (Edge e : w.g.in_edges(v)) relax(e);
        }
    }

    // faces and the dual; left face of an st-directed edge
    FaceStructure fs = faces(w.g, w.rot);
    auto left_face = [&](Edge e) {
        bool st_forward = st_tail(e) == w.g.tail(e);
        return fs.face_of(Dart{e, st_forward});
    };
    auto right_face = [&](Edge e) {
        bool st_forward = st_tail(e) == w.g.tail(e);
        return fs.face_of(Dart{e, !st_forward});
    };
    int nf = (int)fs.faces.size();
    std::vector<int> xcol(nf, -1);
    for (int polarity = 0; polarity < 2; ++polarity) {
        std::vector<std::vector<int>> dual(nf);
        std::vector<int> indeg(nf, 0);
        for (Edge e : w.g.edges()) {
            if (e == est) continue;
            int a = polarity == 0 ? left_face(e) : right_face(e);
            int b = polarity == 0 ? right_face(e) : left_face(e);
            dual[a].push_back(b);
            indeg[b]++;
        }
        int s_star = polarity == 0 ? left_face(est) : right_face(est);
        // longest path from s_star via topological order
        std::vector<int> topo;
        std::deque<int> q;
        auto id2 = indeg;
        for (int f = 0; f < nf; ++f)
            if (id2[f] == 0) q.push_back(f);
        while (!q.empty()) {
            int f = q.front();
            q.pop_front();
            topo.push_back(f);
            for (int o : dual[f])
                if (--id2[o] == 0) q.push_back(o);
        }
        if ((int)topo.size() != nf) continue;  // cyclic: wrong polarity
        std::fill(xcol.begin(), xcol.end(), -(1 << 20));
        xcol[s_star] = 0;
        for (int f : topo)
            for (int o : dual[f])
                if (xcol[f] > -(1 << 19)) xcol[o] = std::max(xcol[o], xcol[f] + 1);
        bool all_reached = true;
        for (int f = 0; f < nf; ++f)
            if (xcol[f] < 0) all_reached = false;
        if (all_reached) break;
        if (polarity == 1) throw std::logic_error("dual layering failed in both polarities");
    }

    // drawn edge columns and vertex positions
    EdgeMap<int> col;
    for (Edge e : w.g.edges()) {
        if (w.virtual_edge.count(e)) continue;
        col[e] = xcol[left_face(e)];
    }
    GridLayout out;
    VertexMap<GridPoint> pos;
    for (Vertex v : w.g.vertices()) {
        std::vector<int> cs;
        auto take = [&](Edge e) {
            if (!w.virtual_edge.count(e)) cs.push_back(col.at(e));
        };
        for (Edge e : w.g.out_edges(v)) take(e);
        for (Edge e : w.g.in_edges(v)) take(e);
        std::sort(cs.begin(), cs.end());
        if (cs.empty()) throw std::logic_error("vertex without drawn edges");
        int c = cs[cs.size() / 2];
        if (cs.size() == 2) c = cs[0] == cs[1] ? cs[0] : cs[(cs.size() - 1) / 2];
        if (cs.size() == 3) c = cs[1];
        pos[v] = GridPoint{c, yrow.at(v)};
    }

    // unit-step paths for drawn fragments
    EdgeMap<std::vector<GridPoint>> frag_path;
    for (Edge e : w.g.edges()) {
        if (w.virtual_edge.count(e)) continue;
        Vertex a = st_tail(e);
        Vertex b = a == w.g.tail(e) ? w.g.head(e) : w.g.tail(e);
        int c = col.at(e);
        std::vector<GridPoint> pts;
        auto push_h = [&](int y, int x0, int x1) {
            int step = x1 >= x0 ? 1 : -1;
            for (int x = x0; x != x1; x += step) pts.push_back({x, y});
        };
        auto push_v = [&](int x, int y0, int y1) {
            for (int y = y0; y != y1; ++y) pts.push_back({x, y});
        };
        push_h(pos.at(a).y, pos.at(a).x, c);
        push_v(c, pos.at(a).y, pos.at(b).y);
        push_h(pos.at(b).y, c, pos.at(b).x);
        pts.push_back(pos.at(b));
        // orient along the digraph edge
        if (!(w.g.tail(e) == a)) std::reverse(pts.begin(), pts.end());
        frag_path[e] = std::move(pts);
    }

    // splice subdivision chains back onto the original edges
    for (Edge e : h.edges()) {
        std::vector<GridPoint> pts;
        for (Edge f : w.resolve(e)) {
            const auto& part = frag_path.at(f);
            size_t from = pts.empty() ? 0 : 1;
            pts.insert(pts.end(), part.begin() + (long)from, part.end());
        }
        out.edge_path[e] = std::move(pts);
    }
    for (Vertex v : h.vertices()) out.position[v] = pos.at(v);

    // normalize to 1-based coordinates
    int minx = 1 << 20, miny = 1 << 20, maxx = -(1 << 20), maxy = -(1 << 20);
    auto see = [&](GridPoint p) {
        minx = std::min(minx, p.x);
        miny = std::min(miny, p.y);
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    };
    for (auto& [v, p] : out.position) see(p);
    for (auto& [e, pts] : out.edge_path)
        for (auto& p : pts) see(p);
    for (auto& [v, p] : out.position) p = {p.x - minx + 1, p.y - miny + 1};
    for (auto& [e, pts] : out.edge_path)
        for (auto& p : pts) p = {p.x - minx + 1, p.y - miny + 1};
    out.width = maxx - minx + 1;
    out.height = maxy - miny + 1;
    return out;
}

bool valid_grid_model(const Digraph& h, const GridLayout& gl, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::map<GridPoint, int> owner;  // grid point -> edge id, vertices get -1
    for (auto& [v, p] : gl.position) {
        if (!h.has_vertex(v)) return fail("position for unknown vertex");
        if (owner.count(p)) return fail("two vertices share a point");
        owner[p] = -1;
    }
    for (Edge e : h.edges()) {
        auto it = gl.edge_path.find(e);
        if (it == gl.edge_path.end()) return fail("edge without path");
        const auto& pts = it->second;
        if (pts.size() < 2) return fail("path too short");
        if (!(pts.front() == gl.position.at(h.tail(e)))) return fail("path does not start at tail");
        if (!(pts.back() == gl.position.at(h.head(e)))) return fail("path does not end at head");
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            int dx = std::abs(pts[i].x - pts[i + 1].x);
            int dy = std::abs(pts[i].y - pts[i + 1].y);
            if (dx + dy != 1) return fail("non-unit step");
        }
        std::set<GridPoint> own(pts.begin(), pts.end());
        if (own.size() != pts.size()) return fail("path self-intersects");
        for (size_t i = 1; i + 1 < pts.size(); ++i) {
            if (owner.count(pts[i])) return fail("paths intersect");
        }
        for (size_t i = 1; i + 1 < pts.size(); ++i) owner[pts[i]] = e.id;
    }
    return true;
}

}  // namespace euler
