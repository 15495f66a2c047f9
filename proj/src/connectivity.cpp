#include "euler/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_set>

namespace euler {

std::vector<PathType> Linkage::type(const Digraph& g) const {
    std::vector<PathType> res;
    for (const auto& p : paths) {
        (void)g;
        if (!p.trivial()) res.push_back(path_type(p));
    }
    std::sort(res.begin(), res.end());
    return res;
}

bool Linkage::edge_disjoint(const Digraph& g) const {
    std::unordered_set<int> seen;
    for (const auto& p : paths) {
        if (!p.valid(g)) return false;
        for (Edge e : p.edges)
            if (!seen.insert(e.id).second) return false;
    }
    return true;
}

bool Linkage::all_linear(const Digraph& g) const {
    for (const auto& p : paths)
        if (!p.is_linear(g)) return false;
    return true;
}

namespace {

// Unit-capacity max flow over the graph's edges. In directed mode each edge
// is one arc; in undirected mode each edge may be traversed either way but
// only once. Loops are ignored (they never cross a cut).
struct FlowNet {
    const Digraph& g;
    bool undirected;
    EdgeMap<int> state;  // 0 unused, +1 used tail->head, -1 used head->tail
    VertexMap<bool> source, sink;

    FlowNet(const Digraph& g_, bool und, const std::vector<Vertex>& x1,
            const std::vector<Vertex>& x2)
        : g(g_), undirected(und) {
        for (Vertex v : x1) {
            if (!g.has_vertex(v)) throw input_error("unknown vertex id " + std::to_string(v.id));
            source[v] = true;
        }
        for (Vertex v : x2) {
            if (!g.has_vertex(v)) throw input_error("unknown vertex id " + std::to_string(v.id));
            sink[v] = true;
        }
    }

    int use(Edge e) const { return state.count(e) ? state.at(e) : 0; }

    // one BFS augmentation; returns false when no augmenting path remains
    bool augment() {
        VertexMap<std::pair<Edge, int>> pred;  // edge + direction used to reach
        std::deque<Vertex> q;
        VertexMap<bool> visited;
        for (Vertex v : g.vertices())
            if (source.count(v)) {
                visited[v] = true;
                q.push_back(v);
            }
        Vertex hit{-1};
        while (!q.empty() && hit.id < 0) {
            Vertex v = q.front();
            q.pop_front();
            if (sink.count(v)) {
                hit = v;
                break;
            }
            auto relax = [&](Vertex to, Edge e, int dir) {
                if (visited.count(to)) return;
                visited[to] = true;
                pred[to] = {e, dir};
                q.push_back(to);
            };
            for (Edge e : g.out_edges(v)) {
                if (g.is_loop(e)) continue;
                int s = use(e);
                if (s == 0) relax(g.head(e), e, +1);
                else if (s == -1) relax(g.head(e), e, 0);  // cancel reverse use
            }
            for (Edge e : g.in_edges(v)) {
                if (g.is_loop(e)) continue;
                int s = use(e);
                if (s == +1) relax(g.tail(e), e, 0);  // cancel forward use
                else if (s == 0 && undirected) relax(g.tail(e), e, -1);
            }
        }
        if (hit.id < 0) return false;
        // unwind
        Vertex v = hit;
        while (!source.count(v)) {
            auto [e, dir] = pred.at(v);
            if (dir == +1) {
                state[e] = +1;
                v = g.tail(e);
            } else if (dir == -1) {
                state[e] = -1;
                v = g.head(e);
            } else {
                // cancellation: edge returns to unused, step to its other end
                bool was_fwd = use(e) == +1;
                state[e] = 0;
                v = was_fwd ? g.head(e) : g.tail(e);
            }
        }
        return true;
    }

    int run() {
        int total = 0;
        while (augment()) ++total;
        return total;
    }

    // source-side of the min cut: vertices reachable in the residual
    std::vector<Vertex> reachable() const {
        VertexMap<bool> visited;
        std::deque<Vertex> q;
        for (Vertex v : g.vertices())
            if (source.count(v)) {
                visited[v] = true;
                q.push_back(v);
            }
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            auto relax = [&](Vertex to) {
                if (!visited.count(to)) {
                    visited[to] = true;
                    q.push_back(to);
                }
            };
            for (Edge e : g.out_edges(v)) {
                if (g.is_loop(e)) continue;
                int s = use(e);
                if (s == 0 || s == -1) relax(g.head(e));
            }
            for (Edge e : g.in_edges(v)) {
                if (g.is_loop(e)) continue;
                int s = use(e);
                if (s == +1 || (s == 0 && undirected)) relax(g.tail(e));
            }
        }
        std::vector<Vertex> res;
        for (Vertex v : g.vertices())
            if (visited.count(v)) res.push_back(v);
        return res;
    }

    // decompose the used edges into source->sink paths (leftover cycles dropped)
    std::vector<EdgePath> decompose() {
        VertexMap<std::vector<Edge>> outflow;
        for (Edge e : g.edges()) {
            int s = use(e);
            if (s == +1) outflow[g.tail(e)].push_back(e);
            else if (s == -1) outflow[g.head(e)].push_back(e);
        }
        auto flow_head = [&](Edge e) { return use(e) == +1 ? g.head(e) : g.tail(e); };
        std::vector<EdgePath> paths;
        EdgeMap<bool> taken;
        while (true) {
            Edge start{-1};
            for (Vertex v : g.vertices()) {
                if (!source.count(v)) continue;
                for (Edge e : outflow[v])
                    if (!taken.count(e)) {
                        start = e;
                        break;
                    }
                if (start.id >= 0) break;
            }
            if (start.id < 0) break;
            EdgePath p;
            Edge cur = start;
            while (true) {
                taken[cur] = true;
                p.edges.push_back(cur);
                Vertex v = flow_head(cur);
                if (sink.count(v)) break;
                Edge nxt{-1};
                for (Edge e : outflow[v])
                    if (!taken.count(e)) {
                        nxt = e;
                        break;
                    }
                assert(nxt.id >= 0 && "flow decomposition stuck");
                cur = nxt;
            }
            paths.push_back(std::move(p));
        }
        return paths;
    }
};

}  // namespace

Linkage max_directed_paths(const Digraph& g, const std::vector<Vertex>& x1,
                           const std::vector<Vertex>& x2) {
    Linkage l;
    if (x1.empty() || x2.empty()) return l;
    FlowNet net(g, false, x1, x2);
    net.run();
    // a path witness traverses edges forward only in directed mode
    for (auto& p : net.decompose()) l.paths.push_back(std::move(p));
    return l;
}

BidirectionalPacking max_bidirectional_packing(const Digraph& g, const std::vector<Vertex>& x1,
                                               const std::vector<Vertex>& x2) {
    if (!is_eulerian(g)) throw input_error("max_bidirectional_packing requires an Eulerian digraph");
    std::unordered_set<int> a;
    for (Vertex v : x1) a.insert(v.id);
    for (Vertex v : x2)
        if (a.count(v.id)) throw input_error("x1 and x2 must be disjoint");
    BidirectionalPacking res;
    res.forward = max_directed_paths(g, x1, x2);
    res.k = res.forward.order();
    // in an Eulerian graph, g minus the forward paths still carries k paths back
    Digraph rest = g;
    for (const auto& p : res.forward.paths)
        for (Edge e : p.edges) rest.remove_edge(e);
    res.backward = max_directed_paths(rest, x2, x1);
    if (res.backward.order() < res.k)
        throw std::logic_error("bidirectional packing: backward phase fell short");
    res.backward.paths.resize(res.k);
    return res;
}

std::optional<VertexCut> min_separating_cut(const Digraph& g, const std::vector<Vertex>& x1,
                                            const std::vector<Vertex>& x2) {
    std::unordered_set<int> a;
    for (Vertex v : x1) a.insert(v.id);
    for (Vertex v : x2)
        if (a.count(v.id)) return std::nullopt;  // no separating cut exists
    if (x2.empty()) return induced_cut(g, g.vertices());
    if (x1.empty()) return induced_cut(g, std::vector<Vertex>{});
    FlowNet net(g, true, x1, x2);
    net.run();
    return induced_cut(g, net.reachable());
}

EdgePath linearize_path(const Digraph& g, const EdgePath& p) {
    if (!p.valid(g)) throw input_error("linearize: invalid path");
    if (p.length() <= 1) return p;
    std::vector<Edge> out;
    std::vector<Vertex> endp;  // endp[i] = endpoint after out[0..i-1] edges (internal only)
    VertexMap<int> at;
    const int m = p.length();
    for (int i = 0; i < m; ++i) {
        Edge e = p.edges[i];
        out.push_back(e);
        if (i + 1 == m) break;  // final endpoint may repeat freely
        Vertex h = g.head(e);
        auto it = at.find(h);
        if (it != at.end()) {
            // returned to an earlier internal vertex: drop the cycle
            int keep = it->second;  // number of edges to keep
            for (int j = keep; j < (int)endp.size(); ++j) at.erase(endp[j]);
            out.resize(keep);
            endp.resize(keep);
        } else {
            at[h] = (int)out.size();
            endp.push_back(h);
        }
    }
    EdgePath res;
    res.edges = std::move(out);
    return res;
}

Linkage linearize(const Digraph& g, const Linkage& l) {
    Linkage res;
    for (const auto& p : l.paths) res.paths.push_back(linearize_path(g, p));
    return res;
}

}  // namespace euler
