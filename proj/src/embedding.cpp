#include "euler/embedding.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "euler/generators.hpp"

namespace euler {

bool valid_rotation(const Digraph& g, const RotationEmbedding& r, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::set<std::pair<int, int>> seen;  // (edge, at_head)
    for (Vertex v : g.vertices()) {
        auto it = r.rotation.find(v);
        if (it == r.rotation.end()) {
            if (g.degree(v) != 0) return fail("vertex missing from rotation");
            continue;
        }
        for (EdgeEnd end : it->second) {
            if (!g.has_edge(end.e)) return fail("rotation references unknown edge");
            Vertex at = end.at_head ? g.head(end.e) : g.tail(end.e);
            if (!(at == v)) return fail("edge end listed at the wrong vertex");
            if (!seen.insert({end.e.id, end.at_head}).second) return fail("edge end repeated");
        }
    }
    if ((int)seen.size() != 2 * g.m()) return fail("some edge end missing");
    for (auto& [v, ends] : r.rotation)
        if (!g.has_vertex(v)) return fail("rotation lists unknown vertex");
    return true;
}

int FaceStructure::face_of(Dart d) const {
    return d.forward ? face_of_forward[d.e.id] : face_of_backward[d.e.id];
}

std::pair<int, int> FaceStructure::flanks(Edge e) const {
    return {face_of_forward[e.id], face_of_backward[e.id]};
}

FaceStructure faces(const Digraph& g, const RotationEmbedding& r) {
    std::string why;
    if (!valid_rotation(g, r, &why)) throw input_error("invalid rotation: " + why);
    // position lookup: (edge, at_head) -> (vertex, index in rotation)
    std::map<std::pair<int, int>, std::pair<Vertex, int>> pos;
    for (auto& [v, ends] : r.rotation)
        for (int i = 0; i < (int)ends.size(); ++i)
            pos[{ends[i].e.id, ends[i].at_head}] = {v, i};

    auto next_dart = [&](Dart d) -> Dart {
        // d arrives at head(e) when forward, tail(e) when backward
        EdgeEnd arrive{d.e, d.forward};
        auto [v, i] = pos.at({arrive.e.id, arrive.at_head});
        const auto& ends = r.rotation.at(v);
        EdgeEnd depart = ends[(i + 1) % ends.size()];
        // departing along a tail end runs the edge forward, along a head
        // end runs it backward
        return Dart{depart.e, !depart.at_head};
    };

    FaceStructure fs;
    int max_eid = 0;
    for (Edge e : g.edges()) max_eid = std::max(max_eid, e.id + 1);
    fs.face_of_forward.assign(max_eid, -1);
    fs.face_of_backward.assign(max_eid, -1);
    for (Edge e0 : g.edges()) {
        for (bool fwd : {true, false}) {
            Dart d0{e0, fwd};
            int& slot = fwd ? fs.face_of_forward[e0.id] : fs.face_of_backward[e0.id];
            if (slot != -1) continue;
            int id = (int)fs.faces.size();
            std::vector<Dart> orbit;
            Dart d = d0;
            do {
                (d.forward ? fs.face_of_forward[d.e.id] : fs.face_of_backward[d.e.id]) = id;
                orbit.push_back(d);
                d = next_dart(d);
            } while (!(d == d0));
            fs.faces.push_back(std::move(orbit));
        }
    }
    // genus per component: V - E + F = 2 - 2g
    auto comps = weak_components(g);
    fs.genus = 0;
    for (auto& comp : comps) {
        std::unordered_set<int> cv;
        for (Vertex v : comp) cv.insert(v.id);
        int V = (int)comp.size();
        int E = 0;
        std::set<int> F;
        for (Edge e : g.edges())
            if (cv.count(g.tail(e).id)) {
                ++E;
                F.insert(fs.face_of_forward[e.id]);
                F.insert(fs.face_of_backward[e.id]);
            }
        int nf = E == 0 ? 1 : (int)F.size();
        int euler = V - E + nf;
        if ((2 - euler) % 2 != 0) throw input_error("odd Euler characteristic");
        fs.genus += (2 - euler) / 2;
    }
    return fs;
}

VertexClass vertex_embedding_class(const Digraph& g, const RotationEmbedding& r, Vertex v) {
    if (!is_eulerian_vertex(g, v)) return VertexClass::not_applicable;
    int d = g.degree(v);
    if (d == 0 || d == 2) return VertexClass::eulerian_embedded;
    if (d != 4) return VertexClass::not_applicable;
    const auto& ends = r.rotation.at(v);
    // an end is inbound when it is the head end
    bool alternating = true;
    for (size_t i = 0; i < ends.size(); ++i)
        if (ends[i].at_head == ends[(i + 1) % ends.size()].at_head) alternating = false;
    return alternating ? VertexClass::eulerian_embedded : VertexClass::strongly_planar;
}

bool is_plane_euler_embedding(const Digraph& g, const RotationEmbedding& r) {
    for (Vertex v : g.vertices())
        if (g.degree(v) == 4 &&
            vertex_embedding_class(g, r, v) != VertexClass::eulerian_embedded)
            return false;
    return faces(g, r).genus == 0;
}

namespace {

std::vector<EdgeEnd> ends_at(const Digraph& g, Vertex v) {
    std::vector<EdgeEnd> ends;
    for (Edge e : g.out_edges(v)) ends.push_back({e, false});
    for (Edge e : g.in_edges(v)) ends.push_back({e, true});
    std::sort(ends.begin(), ends.end());
    return ends;
}

// all alternating cyclic orders of a degree-4 vertex's ends, first end pinned
std::vector<std::vector<EdgeEnd>> alternating_rotations(const std::vector<EdgeEnd>& ends) {
    std::vector<std::vector<EdgeEnd>> result;
    std::vector<int> idx{1, 2, 3};
    std::sort(idx.begin(), idx.end());
    do {
        std::vector<EdgeEnd> rot{ends[0], ends[idx[0]], ends[idx[1]], ends[idx[2]]};
        bool alternating = true;
        for (int i = 0; i < 4; ++i)
            if (rot[i].at_head == rot[(i + 1) % 4].at_head) alternating = false;
        if (alternating) result.push_back(std::move(rot));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return result;
}

}  // namespace

EmbeddingSearchResult find_plane_euler_embedding(const Digraph& g, std::int64_t budget_nodes) {
    if (!is_eulerian(g)) throw input_error("find_plane_euler_embedding requires an Eulerian digraph");
    if (g.max_degree() > 4) throw input_error("find_plane_euler_embedding requires max degree 4");
    EmbeddingSearchResult res;
    std::vector<Vertex> deg4;
    RotationEmbedding base;
    for (Vertex v : g.vertices()) {
        auto ends = ends_at(g, v);
        if (ends.size() == 4) deg4.push_back(v);
        else base.rotation[v] = ends;  // degree 0 or 2: unique cyclic order
    }
    std::vector<std::vector<std::vector<EdgeEnd>>> choices;
    for (Vertex v : deg4) {
        choices.push_back(alternating_rotations(ends_at(g, v)));
        if (choices.back().empty()) return res;  // cannot happen for Eulerian deg 4
    }
    // the two alternating rotations of a vertex are mirror images, so the
    // first vertex can be pinned to kill the global reflection
    if (!deg4.empty()) choices[0].resize(1);
    std::int64_t nodes = 0;
    std::vector<int> pick(deg4.size(), 0);
    while (true) {
        if (++nodes > budget_nodes) {
            res.answer = verdict::inconclusive;
            return res;
        }
        RotationEmbedding r = base;
        for (size_t i = 0; i < deg4.size(); ++i) r.rotation[deg4[i]] = choices[i][pick[i]];
        if (faces(g, r).genus == 0) {
            res.answer = verdict::yes;
            res.embedding = std::move(r);
            return res;
        }
        // odometer
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == (int)choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return res;
}

CutCycleCheck validate_cut_cycle(const Digraph& g, const RotationEmbedding& r,
                                 const CutCycleDescriptor& d) {
    CutCycleCheck res;
    if (d.crossed.empty()) {
        res.why = "empty crossing sequence";
        return res;
    }
    std::unordered_set<int> crossed;
    for (Edge e : d.crossed) {
        if (!g.has_edge(e)) throw input_error("cut-cycle references unknown edge");
        if (g.is_loop(e)) {
            res.why = "loops cannot be crossed";
            return res;
        }
        if (!crossed.insert(e.id).second) {
            res.why = "edge crossed twice";
            return res;
        }
    }
    // 2-color the components of g - crossed so every crossed edge alternates
    VertexMap<int> comp;
    int nc = 0;
    for (Vertex v0 : g.vertices()) {
        if (comp.count(v0)) continue;
        std::deque<Vertex> q{v0};
        comp[v0] = nc;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            auto push = [&](Vertex u) {
                if (!comp.count(u)) {
                    comp[u] = nc;
                    q.push_back(u);
                }
            };
            for (Edge e : g.out_edges(v))
                if (!crossed.count(e.id)) push(g.head(e));
            for (Edge e : g.in_edges(v))
                if (!crossed.count(e.id)) push(g.tail(e));
        }
        ++nc;
    }
    std::vector<int> color(nc, -1);
    std::vector<std::vector<int>> adj(nc);
    for (Edge e : d.crossed) {
        int a = comp.at(g.tail(e));
        int b = comp.at(g.head(e));
        if (a == b) {
            res.why = "crossed edge does not separate";
            return res;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int c0 = 0; c0 < nc; ++c0) {
        if (color[c0] != -1) continue;
        color[c0] = 0;
        std::deque<int> q{c0};
        while (!q.empty()) {
            int c = q.front();
            q.pop_front();
            for (int d2 : adj[c]) {
                if (color[d2] == -1) {
                    color[d2] = 1 - color[c];
                    q.push_back(d2);
                } else if (color[d2] == color[c]) {
                    res.why = "crossed set is not an induced cut";
                    return res;
                }
            }
        }
    }
    std::vector<Vertex> x;
    for (Vertex v : g.vertices())
        if (color[comp.at(v)] == 0) x.push_back(v);
    {
        auto cut = induced_cut(g, x);
        std::set<int> got;
        for (Edge e : cut.rho()) got.insert(e.id);
        std::set<int> want(crossed.begin(), crossed.end());
        if (got != want) {
            res.why = "crossed set is not an induced cut";
            return res;
        }
    }
    // face-simple realizability along the given cyclic order
    FaceStructure fs = faces(g, r);
    int rlen = (int)d.crossed.size();
    bool realizable = false;
    for (int seed = 0; seed < 2 && !realizable; ++seed) {
        auto fl = fs.flanks(d.crossed[0]);
        int f = seed == 0 ? fl.first : fl.second;
        // f = face entered after crossing crossed[0]
        std::vector<int> fseq{f};
        bool ok = fl.first != fl.second;
        for (int i = 1; i < rlen && ok; ++i) {
            auto fi = fs.flanks(d.crossed[i]);
            if (fi.first == fseq.back())
                fseq.push_back(fi.second);
            else if (fi.second == fseq.back())
                fseq.push_back(fi.first);
            else
                ok = false;
            if (ok && fi.first == fi.second) ok = false;
        }
        if (ok) {
            // closure: crossing crossed[0] from fseq.back() must land in f
            auto f0 = fs.flanks(d.crossed[0]);
            ok = (fseq.back() == f0.first && f == f0.second) ||
                 (fseq.back() == f0.second && f == f0.first);
        }
        if (ok) {
            std::set<int> distinct(fseq.begin(), fseq.end());
            ok = (int)distinct.size() == rlen;
        }
        realizable = ok;
    }
    if (!realizable) {
        res.why = "no face-simple realization in this cyclic order";
        return res;
    }
    res.ok = true;
    res.side = std::move(x);
    return res;
}

bool cut_cycle_alternating(const Digraph& g, const CutCycleDescriptor& d,
                           const std::vector<Vertex>& side) {
    std::unordered_set<int> in_x;
    for (Vertex v : side) in_x.insert(v.id);
    int r = (int)d.crossed.size();
    if (r % 2 != 0) return false;
    for (int i = 0; i < r; ++i) {
        bool in_i = in_x.count(g.head(d.crossed[i]).id) != 0;
        bool in_j = in_x.count(g.head(d.crossed[(i + 1) % r]).id) != 0;
        if (in_i == in_j) return false;
    }
    return true;
}

CutCycleEnumeration enumerate_cut_cycles(const Digraph& g, const RotationEmbedding& r,
                                         int max_order, std::int64_t budget_nodes) {
    CutCycleEnumeration res;
    FaceStructure fs = faces(g, r);
    int nf = (int)fs.faces.size();
    // dual multigraph: faces as nodes, non-degenerate edges as links
    std::vector<std::vector<std::pair<int, Edge>>> dual(nf);
    for (Edge e : g.edges()) {
        auto [a, b] = fs.flanks(e);
        if (a == b || g.is_loop(e)) continue;
        dual[a].push_back({b, e});
        dual[b].push_back({a, e});
    }
    std::int64_t nodes = 0;
    std::set<std::vector<int>> seen;
    std::vector<int> fpath;
    std::vector<Edge> epath;
    std::unordered_set<int> on_path, edges_used;

    auto canonical = [](const std::vector<Edge>& cyc) {
        // smallest rotation of the smaller of the two directions
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

    struct Budget {};
    std::function<void(int)> dfs = [&](int at) {
        if (++nodes > budget_nodes) throw Budget{};
        for (auto [to, e] : dual[at]) {
            if (edges_used.count(e.id)) continue;
            if (to == fpath.front() && (int)epath.size() >= 1) {
                std::vector<Edge> cyc = epath;
                cyc.push_back(e);
                if ((int)cyc.size() >= 2) {
                    auto key = canonical(cyc);
                    if (!seen.count(key)) {
                        CutCycleDescriptor d{cyc};
                        if (validate_cut_cycle(g, r, d).ok) {
                            seen.insert(key);
                            res.cycles.push_back(std::move(d));
                        }
                    }
                }
            }
            if ((int)epath.size() + 1 >= max_order) continue;
            if (on_path.count(to)) continue;
            on_path.insert(to);
            fpath.push_back(to);
            epath.push_back(e);
            edges_used.insert(e.id);
            dfs(to);
            edges_used.erase(e.id);
            epath.pop_back();
            fpath.pop_back();
            on_path.erase(to);
        }
    };
    try {
        for (int f = 0; f < nf; ++f) {
            fpath = {f};
            on_path = {f};
            epath.clear();
            edges_used.clear();
            dfs(f);
        }
    } catch (Budget&) {
        return res;  // inconclusive, cycles partial
    }
    res.answer = verdict::yes;
    return res;
}

std::vector<EdgePath> enumerate_circles(const Digraph& g, int max_len,
                                        std::int64_t budget_nodes) {
    std::vector<EdgePath> out;
    std::int64_t nodes = 0;
    struct Budget {};
    std::vector<Edge> cur;
    std::unordered_set<int> on_cycle;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex at) {
        if (++nodes > budget_nodes) throw Budget{};
        for (Edge e : g.out_edges(at)) {
            Vertex to = g.head(e);
            if (to == start) {
                std::vector<Edge> cyc = cur;
                cyc.push_back(e);
                out.push_back(EdgePath{cyc, {}});
                continue;
            }
            if ((int)cur.size() + 1 >= max_len) continue;
            if (on_cycle.count(to.id)) continue;
            if (to.id < start.id) continue;  // canonical start: minimum vertex
            on_cycle.insert(to.id);
            cur.push_back(e);
            dfs(start, to);
            cur.pop_back();
            on_cycle.erase(to.id);
        }
    };
    try {
        for (Vertex v : g.vertices()) {
            cur.clear();
            on_cycle = {};
            dfs(v, v);
        }
    } catch (Budget&) {
        // truncated enumeration still returns what was found
    }
    return out;
}

Digraph subgraph_inside_circle(const Digraph& g, const RotationEmbedding& r,
                               const FaceStructure& fs, const EdgePath& circle, int outer_face) {
    (void)r;
    if (!circle.is_circle(g)) throw input_error("not a circle");
    std::unordered_set<int> on_c;
    for (Edge e : circle.edges) on_c.insert(e.id);
    // flood faces from the outer face without crossing the circle
    int nf = (int)fs.faces.size();
    std::vector<char> outside(nf, 0);
    std::deque<int> q{outer_face};
    outside[outer_face] = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (Edge e : g.edges()) {
            if (on_c.count(e.id)) continue;
            auto [a, b] = fs.flanks(e);
            if (a == f && !outside[b]) {
                outside[b] = 1;
                q.push_back(b);
            }
            if (b == f && !outside[a]) {
                outside[a] = 1;
                q.push_back(a);
            }
        }
    }
    Digraph inside;
    std::unordered_set<int> vs;
    auto keep_edge = [&](Edge e) {
        if (on_c.count(e.id)) return true;
        auto [a, b] = fs.flanks(e);
        return !outside[a] && !outside[b];
    };
    for (Edge e : g.edges())
        if (keep_edge(e)) {
            vs.insert(g.tail(e).id);
            vs.insert(g.head(e).id);
        }
    for (Vertex v : g.vertices())
        if (vs.count(v.id)) inside.add_vertex(v);
    for (Edge e : g.edges())
        if (keep_edge(e)) inside.add_edge(e, g.tail(e), g.head(e));
    return inside;
}

Digraph linegraph(const Digraph& g) {
    Digraph l;
    for (Edge e : g.edges()) l.add_vertex(Vertex{e.id});
    for (Edge e1 : g.edges())
        for (Edge e2 : g.out_edges(g.head(e1)))
            if (!(e1 == e2)) l.add_edge(Vertex{e1.id}, Vertex{e2.id});
    return l;
}

Digraph subdivide_all(const Digraph& g) {
    Digraph s;
    for (Vertex v : g.vertices()) s.add_vertex(v);
    Vertex next = g.fresh_vertex_id();
    int next_eid = 0;
    for (Edge e : g.edges()) next_eid = std::max(next_eid, e.id + 1);
    for (Edge e : g.edges()) {
        Vertex mid = s.add_vertex(next);
        next = Vertex{next.id + 1};
        s.add_edge(e, g.tail(e), mid);
        s.add_edge(Edge{next_eid++}, mid, g.head(e));
    }
    return s;
}

Digraph linegraph_plus(const Digraph& g) { return linegraph(subdivide_all(g)); }

// Canonical drawing: each vertex's ends sorted by compass direction
// (NE, NW, SW, SE), derived from the cell geometry.
RotationEmbedding euler_grid_rotation(const EulerGrid& eg) {
    const Digraph& g = eg.graph;
    VertexMap<std::vector<std::pair<int, EdgeEnd>>> slots;
    enum { NE = 0, NW = 1, SW = 2, SE = 3 };
    auto put = [&](Vertex v, int dir, Edge e, bool at_head) {
        slots[v].push_back({dir, EdgeEnd{e, at_head}});
    };
    for (int x = 1; x <= eg.k; ++x) {
        for (int y = 1; y <= eg.n; ++y) {
            const auto& es = eg.cell_edges(x, y);
            Vertex l = eg.l(x, y), t = eg.t(x, y), r = eg.r(x, y), b = eg.b(x, y);
            if (eg.cell_acw(x, y)) {
                // es = (l->b), (b->r), (r->t), (t->l)
                put(l, SE, es[0], false);
                put(l, NE, es[3], true);
                put(b, NW, es[0], true);
                put(b, NE, es[1], false);
                put(r, SW, es[1], true);
                put(r, NW, es[2], false);
                put(t, SE, es[2], true);
                put(t, SW, es[3], false);
            } else {
                // es = (l->t), (t->r), (r->b), (b->l)
                put(l, NE, es[0], false);
                put(l, SE, es[3], true);
                put(t, SW, es[0], true);
                put(t, SE, es[1], false);
                put(r, NW, es[1], true);
                put(r, SW, es[2], false);
                put(b, NE, es[2], true);
                put(b, NW, es[3], false);
            }
        }
    }
    RotationEmbedding rot;
    for (auto& [v, list] : slots) {
        std::sort(list.begin(), list.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [dir, end] : list) rot.rotation[v].push_back(end);
    }
    for (Vertex v : g.vertices())
        if (!rot.rotation.count(v)) rot.rotation[v] = {};
    return rot;
}

}  // namespace euler

