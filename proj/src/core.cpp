#include "euler/core.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace euler {

// ---------------------------------------------------------------- Digraph

const Digraph::VRec& Digraph::rec(Vertex v) const {
    auto it = vrec_.find(v);
    if (it == vrec_.end()) throw input_error("unknown vertex id " + std::to_string(v.id));
    return it->second;
}

Digraph::VRec& Digraph::rec(Vertex v) {
    auto it = vrec_.find(v);
    if (it == vrec_.end()) throw input_error("unknown vertex id " + std::to_string(v.id));
    return it->second;
}

const Digraph::ERec& Digraph::rec(Edge e) const {
    auto it = erec_.find(e);
    if (it == erec_.end()) throw input_error("unknown edge id " + std::to_string(e.id));
    return it->second;
}

Vertex Digraph::add_vertex() { return add_vertex(Vertex{next_vid_}); }

Vertex Digraph::add_vertex(Vertex v) {
    if (v.id < 0) throw input_error("vertex ids must be non-negative");
    if (has_vertex(v)) throw input_error("duplicate vertex id " + std::to_string(v.id));
    vrec_.emplace(v, VRec{});
    verts_.push_back(v);
    next_vid_ = std::max(next_vid_, v.id + 1);
    return v;
}

Edge Digraph::add_edge(Vertex tail, Vertex head) { return add_edge(Edge{next_eid_}, tail, head); }

Edge Digraph::add_edge(Edge e, Vertex tail, Vertex head) {
    if (e.id < 0) throw input_error("edge ids must be non-negative");
    if (has_edge(e)) throw input_error("duplicate edge id " + std::to_string(e.id));
    VRec& t = rec(tail);
    VRec& h = rec(head);
    erec_.emplace(e, ERec{tail, head});
    edges_.push_back(e);
    t.out.push_back(e);
    h.in.push_back(e);
    next_eid_ = std::max(next_eid_, e.id + 1);
    return e;
}

static void erase_value(std::vector<Edge>& v, Edge e) {
    v.erase(std::find(v.begin(), v.end(), e));
}

void Digraph::remove_edge(Edge e) {
    const ERec r = rec(e);
    erase_value(vrec_.at(r.tail).out, e);
    erase_value(vrec_.at(r.head).in, e);
    erec_.erase(e);
    edges_.erase(std::find(edges_.begin(), edges_.end(), e));
}

void Digraph::remove_vertex(Vertex v) {
    const VRec& r = rec(v);
    if (!r.out.empty() || !r.in.empty()) throw input_error("removing non-isolated vertex");
    vrec_.erase(v);
    verts_.erase(std::find(verts_.begin(), verts_.end(), v));
}

std::vector<Edge> Digraph::incident_edges(Vertex v) const {
    std::vector<Edge> res = rec(v).out;
    for (Edge e : rec(v).in)
        if (!is_loop(e)) res.push_back(e);
    return res;
}

std::vector<Edge> Digraph::loops(Vertex v) const {
    std::vector<Edge> res;
    for (Edge e : rec(v).out)
        if (head(e) == v) res.push_back(e);
    return res;
}

int Digraph::loop_count(Vertex v) const { return (int)loops(v).size(); }

int Digraph::max_degree() const {
    int d = 0;
    for (Vertex v : verts_) d = std::max(d, degree(v));
    return d;
}

bool Digraph::operator==(const Digraph& o) const {
    if (n() != o.n() || m() != o.m()) return false;
    for (Vertex v : verts_)
        if (!o.has_vertex(v)) return false;
    for (Edge e : edges_) {
        if (!o.has_edge(e)) return false;
        if (tail(e) != o.tail(e) || head(e) != o.head(e)) return false;
    }
    return true;
}

// ---------------------------------------------------------- UndirectedGraph

Vertex UndirectedGraph::add_vertex() { return add_vertex(Vertex{next_vid_}); }

Vertex UndirectedGraph::add_vertex(Vertex v) {
    if (has_vertex(v)) throw input_error("duplicate vertex id " + std::to_string(v.id));
    adj_.emplace(v, std::vector<Edge>{});
    verts_.push_back(v);
    next_vid_ = std::max(next_vid_, v.id + 1);
    return v;
}

Edge UndirectedGraph::add_edge(Vertex a, Vertex b) { return add_edge(Edge{next_eid_}, a, b); }

Edge UndirectedGraph::add_edge(Edge e, Vertex a, Vertex b) {
    if (has_edge(e)) throw input_error("duplicate edge id " + std::to_string(e.id));
    if (!has_vertex(a) || !has_vertex(b)) throw input_error("edge endpoint missing");
    ends_.emplace(e, std::make_pair(a, b));
    edges_.push_back(e);
    adj_[a].push_back(e);
    if (!(a == b)) adj_[b].push_back(e);
    else adj_[a].push_back(e);  // loop appears twice, degree counts 2
    next_eid_ = std::max(next_eid_, e.id + 1);
    return e;
}

void UndirectedGraph::remove_edge(Edge e) {
    auto [a, b] = ends(e);
    auto& va = adj_.at(a);
    va.erase(std::find(va.begin(), va.end(), e));
    auto& vb = adj_.at(b);
    auto it = std::find(vb.begin(), vb.end(), e);
    if (it != vb.end()) vb.erase(it);
    ends_.erase(e);
    edges_.erase(std::find(edges_.begin(), edges_.end(), e));
}

void UndirectedGraph::remove_vertex(Vertex v) {
    if (!incident(v).empty()) throw input_error("removing non-isolated vertex");
    adj_.erase(v);
    verts_.erase(std::find(verts_.begin(), verts_.end(), v));
}

std::pair<Vertex, Vertex> UndirectedGraph::ends(Edge e) const {
    auto it = ends_.find(e);
    if (it == ends_.end()) throw input_error("unknown edge id " + std::to_string(e.id));
    return it->second;
}

Vertex UndirectedGraph::other_end(Edge e, Vertex v) const {
    auto [a, b] = ends(e);
    if (a == v) return b;
    if (b == v) return a;
    throw input_error("vertex not an end of edge");
}

const std::vector<Edge>& UndirectedGraph::incident(Vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw input_error("unknown vertex id " + std::to_string(v.id));
    return it->second;
}

std::vector<Vertex> UndirectedGraph::neighbors(Vertex v) const {
    std::vector<Vertex> res;
    for (Edge e : incident(v)) {
        Vertex u = other_end(e, v);
        if (std::find(res.begin(), res.end(), u) == res.end() && !(u == v)) res.push_back(u);
    }
    return res;
}

// ---------------------------------------------------------------- EdgePath

std::vector<Vertex> EdgePath::internal_vertices(const Digraph& g) const {
    std::vector<Vertex> res;
    for (size_t i = 0; i + 1 < edges.size(); ++i) res.push_back(g.head(edges[i]));
    return res;
}

bool EdgePath::valid(const Digraph& g) const {
    if (trivial()) return g.has_vertex(anchor);
    std::unordered_set<int> seen;
    for (Edge e : edges) {
        if (!g.has_edge(e)) return false;
        if (!seen.insert(e.id).second) return false;
    }
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (g.head(edges[i]) != g.tail(edges[i + 1])) return false;
    return true;
}

bool EdgePath::is_linear(const Digraph& g) const {
    if (!valid(g)) return false;
    auto internals = internal_vertices(g);
    std::set<int> s;
    for (Vertex v : internals)
        if (!s.insert(v.id).second) return false;
    return true;
}

bool EdgePath::is_cycle(const Digraph& g) const {
    return valid(g) && !trivial() && g.head(edges.back()) == g.tail(edges.front());
}

bool EdgePath::is_circle(const Digraph& g) const {
    if (!is_cycle(g)) return false;
    std::set<int> s;
    for (Edge e : edges)
        if (!s.insert(g.tail(e).id).second) return false;
    return true;
}

// ----------------------------------------------------------------- cuts etc.

std::vector<Edge> VertexCut::rho() const {
    std::vector<Edge> res = rho_minus;
    res.insert(res.end(), rho_plus.begin(), rho_plus.end());
    return res;
}

bool is_eulerian_vertex(const Digraph& g, Vertex v) {
    return g.in_degree(v) == g.out_degree(v);
}

bool is_eulerian(const Digraph& g) {
    for (Vertex v : g.vertices())
        if (!is_eulerian_vertex(g, v)) return false;
    return true;
}

bool is_weakly_connected(const Digraph& g) { return weak_components(g).size() <= 1; }

std::vector<std::vector<Vertex>> weak_components(const Digraph& g) {
    VertexMap<int> comp;
    std::vector<std::vector<Vertex>> res;
    for (Vertex v0 : g.vertices()) {
        if (comp.count(v0)) continue;
        std::vector<Vertex> stack{v0}, members;
        comp[v0] = (int)res.size();
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            members.push_back(v);
            auto push = [&](Vertex u) {
                if (!comp.count(u)) {
                    comp[u] = (int)res.size();
                    stack.push_back(u);
                }
            };
            for (Edge e : g.out_edges(v)) push(g.head(e));
            for (Edge e : g.in_edges(v)) push(g.tail(e));
        }
        res.push_back(std::move(members));
    }
    return res;
}

VertexCut induced_cut(const Digraph& g, std::span<const Vertex> x) {
    std::unordered_set<int> in_x;
    for (Vertex v : x) {
        if (!g.has_vertex(v)) throw input_error("cut side contains unknown vertex id " + std::to_string(v.id));
        in_x.insert(v.id);
    }
    VertexCut cut;
    cut.side.assign(x.begin(), x.end());
    std::sort(cut.side.begin(), cut.side.end());
    cut.side.erase(std::unique(cut.side.begin(), cut.side.end()), cut.side.end());
    for (Edge e : g.edges()) {
        bool t = in_x.count(g.tail(e).id) != 0;
        bool h = in_x.count(g.head(e).id) != 0;
        if (t && !h) cut.rho_plus.push_back(e);
        if (h && !t) cut.rho_minus.push_back(e);
    }
    return cut;
}

VertexCut induced_cut(const Digraph& g, const std::vector<Vertex>& x) {
    return induced_cut(g, std::span<const Vertex>(x));
}

std::pair<Digraph, Edge> split_off(const Digraph& g, Edge e, Edge e2) {
    if (!g.has_edge(e) || !g.has_edge(e2)) throw input_error("split_off: unknown edge");
    if (e == e2) throw input_error("split_off: the two edges must be distinct");
    Vertex v = g.head(e);
    if (g.tail(e2) != v) throw input_error("split_off: pair is not composable at a vertex");
    Digraph h = g;
    Vertex u = g.tail(e);
    Vertex w = g.head(e2);
    h.remove_edge(e);
    h.remove_edge(e2);
    Edge f = h.add_edge(h.fresh_edge_id(), u, w);
    if (h.in_degree(v) == 0 && h.out_degree(v) == 0) h.remove_vertex(v);
    return {std::move(h), f};
}

Digraph split_along(const Digraph& g, const std::vector<std::pair<Edge, Edge>>& pairs) {
    Digraph h = g;
    // rename map: edge consumed by an earlier split -> its replacement
    EdgeMap<Edge> renamed;
    auto resolve = [&](Edge e) {
        while (renamed.count(e)) e = renamed.at(e);
        return e;
    };
    for (auto [a, b] : pairs) {
        Edge ra = resolve(a), rb = resolve(b);
        auto [h2, f] = split_off(h, ra, rb);
        renamed[ra] = f;
        renamed[rb] = f;
        h = std::move(h2);
    }
    return h;
}

std::pair<Digraph, std::vector<std::pair<Edge, Edge>>> split_along_path(const Digraph& g,
                                                                        const EdgePath& p) {
    if (!p.valid(g)) throw input_error("split_along_path: not a path");
    std::vector<std::pair<Edge, Edge>> pairs;
    Digraph h = g;
    if (p.length() <= 1) return {std::move(h), pairs};
    Edge cur = p.edges[0];
    for (size_t i = 1; i < p.edges.size(); ++i) {
        pairs.emplace_back(cur, p.edges[i]);
        auto [h2, f] = split_off(h, cur, p.edges[i]);
        h = std::move(h2);
        cur = f;
    }
    return {std::move(h), pairs};
}

std::vector<EdgePath> cycle_cover(const Digraph& g) {
    if (!is_eulerian(g)) throw input_error("cycle_cover requires an Eulerian digraph");
    EdgeMap<bool> used;
    VertexMap<size_t> next_out;  // scan position into out_edges
    std::vector<EdgePath> cover;
    for (Edge e0 : g.edges()) {
        if (used.count(e0)) continue;
        // greedy closed walk starting with e0; in an Eulerian graph it can
        // only get stuck back at tail(e0)
        EdgePath cyc;
        Vertex start = g.tail(e0);
        Edge cur = e0;
        while (true) {
            used[cur] = true;
            cyc.edges.push_back(cur);
            Vertex v = g.head(cur);
            if (v == start) break;
            Edge nxt{-1};
            for (Edge cand : g.out_edges(v)) {
                if (!used.count(cand)) {
                    nxt = cand;
                    break;
                }
            }
            if (nxt.id < 0) throw input_error("cycle_cover: walk stuck (graph not Eulerian?)");
            cur = nxt;
        }
        cover.push_back(std::move(cyc));
    }
    return cover;
}

EdgePath concat(const Digraph& g, const EdgePath& p, const EdgePath& q) {
    if (!p.valid(g) || !q.valid(g)) throw input_error("concat: invalid path operand");
    if (p.trivial()) {
        if (q.source(g) != p.anchor) throw input_error("concat: not composable");
        return q;
    }
    if (q.trivial()) {
        if (p.target(g) != q.anchor) throw input_error("concat: not composable");
        return p;
    }
    EdgePath r;
    if (p.last() == q.first()) {
        // shared end edge; the rest must be internally edge-disjoint
        r.edges = p.edges;
        for (size_t i = 1; i < q.edges.size(); ++i) r.edges.push_back(q.edges[i]);
    } else {
        if (p.target(g) != q.source(g)) throw input_error("concat: not composable");
        r.edges = p.edges;
        r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
    }
    if (!r.valid(g)) throw input_error("concat: operands are not edge-disjoint");
    return r;
}

Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> x) {
    std::unordered_set<int> in_x;
    for (Vertex v : x) in_x.insert(v.id);
    Digraph h;
    for (Vertex v : g.vertices())
        if (in_x.count(v.id)) h.add_vertex(v);
    for (Edge e : g.edges())
        if (in_x.count(g.tail(e).id) && in_x.count(g.head(e).id)) h.add_edge(e, g.tail(e), g.head(e));
    return h;
}

}  // namespace euler
