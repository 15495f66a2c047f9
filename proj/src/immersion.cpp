#include "euler/immersion.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace euler {

ImmersionModel ImmersionModel::identity(const Digraph& g, bool strong) {
    ImmersionModel m;
    m.guest = g;
    m.host = g;
    m.strong = strong;
    for (Vertex v : g.vertices()) m.vmap[v] = v;
    for (Edge e : g.edges()) m.emap[e] = EdgePath{{e}, {}};
    return m;
}

ModelCheck validate_model(const ImmersionModel& m) {
    auto fail = [](std::string why) { return ModelCheck{false, std::move(why)}; };
    const Digraph& g = m.host;
    const Digraph& h = m.guest;
    // totality and id sanity
    for (Vertex v : h.vertices()) {
        auto it = m.vmap.find(v);
        if (it == m.vmap.end()) return fail("vertex map not total");
        if (!g.has_vertex(it->second)) throw input_error("model maps to unknown host vertex");
    }
    for (auto& [v, w] : m.vmap)
        if (!h.has_vertex(v)) throw input_error("model maps unknown guest vertex");
    for (Edge e : h.edges())
        if (!m.emap.count(e)) return fail("edge map not total");
    // injectivity
    {
        std::unordered_set<int> img;
        for (Vertex v : h.vertices())
            if (!img.insert(m.vmap.at(v).id).second) return fail("injectivity");
    }
    // path validity, zero-length ban, endpoints
    for (Edge e : h.edges()) {
        const EdgePath& p = m.emap.at(e);
        if (p.trivial()) return fail("zero-length image");
        if (!p.valid(g)) return fail("path validity");
        if (p.source(g) != m.vmap.at(h.tail(e))) return fail("endpoints");
        if (p.target(g) != m.vmap.at(h.head(e))) return fail("endpoints");
    }
    // pairwise edge-disjoint images
    {
        std::unordered_set<int> used;
        for (Edge e : h.edges())
            for (Edge f : m.emap.at(e).edges)
                if (!used.insert(f.id).second) return fail("edge-disjointness");
    }
    if (m.strong) {
        std::unordered_set<int> img;
        for (Vertex v : h.vertices()) img.insert(m.vmap.at(v).id);
        for (Edge e : h.edges())
            for (Vertex v : m.emap.at(e).internal_vertices(g))
                if (img.count(v.id)) return fail("strongness");
    }
    if (m.rooted) {
        if (m.guest_roots.size() != m.host_roots.size()) return fail("roots: index mismatch");
        for (size_t i = 0; i < m.guest_roots.size(); ++i) {
            const EdgePath& p = m.emap.at(m.guest_roots[i]);
            bool has_own = false;
            for (Edge f : p.edges) {
                for (size_t j = 0; j < m.host_roots.size(); ++j) {
                    if (f == m.host_roots[j]) {
                        if (j != i) return fail("roots: wrong root on image path");
                        has_own = true;
                    }
                }
            }
            if (!has_own) return fail("roots: matched root missing from image path");
        }
    }
    return {};
}

namespace {

struct BudgetExceeded {};

// Complete backtracking search. Guest edges are processed in a static order
// that clusters them around high-degree guest vertices; endpoint images are
// chosen lazily right before an edge is routed, so infeasible routings prune
// the vertex assignment immediately.
struct Searcher {
    const Digraph& h;  // guest
    const Digraph& g;  // host
    const SearchOptions& opt;
    std::int64_t nodes = 0;

    std::vector<Edge> order;          // guest edges, routing order
    std::vector<Vertex> vorder;       // guest vertices by decreasing degree
    VertexMap<Vertex> vmap;
    std::unordered_set<int> used_hosts;
    EdgeMap<EdgePath> emap;
    std::unordered_set<int> used_edges;
    VertexMap<int> internal_count;    // host vertex -> occurrences inside routed paths
    EdgeMap<int> required_root;       // guest root edge -> index

    Searcher(const Digraph& h_, const Digraph& g_, const SearchOptions& o) : h(h_), g(g_), opt(o) {
        vorder = h.vertices();
        std::sort(vorder.begin(), vorder.end(), [&](Vertex a, Vertex b) {
            if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
            return a.id < b.id;
        });
        VertexMap<int> rank;
        for (int i = 0; i < (int)vorder.size(); ++i) rank[vorder[i]] = i;
        order = h.edges();
        auto key = [&](Edge e) {
            int a = rank[h.tail(e)], b = rank[h.head(e)];
            return std::pair<int, int>(std::min(a, b), std::max(a, b));
        };
        std::sort(order.begin(), order.end(), [&](Edge x, Edge y) {
            bool rx = required_root_static(x), ry = required_root_static(y);
            if (rx != ry) return rx;
            auto kx = key(x), ky = key(y);
            if (kx != ky) return kx < ky;
            return x.id < y.id;
        });
        if (opt.roots)
            for (size_t i = 0; i < opt.roots->first.size(); ++i)
                required_root[opt.roots->first[i]] = (int)i;
    }

    bool required_root_static(Edge e) const {
        if (!opt.roots) return false;
        for (Edge r : opt.roots->first)
            if (r == e) return true;
        return false;
    }

    void tick() {
        if (++nodes > opt.budget_nodes) throw BudgetExceeded{};
    }

    bool degree_ok(Vertex gu, Vertex hv) const {
        return g.in_degree(hv) >= h.in_degree(gu) && g.out_degree(hv) >= h.out_degree(gu);
    }

    bool candidate_ok(Vertex gu, Vertex hv) const {
        if (used_hosts.count(hv.id) || !degree_ok(gu, hv)) return false;
        if (opt.strong) {
            auto it = internal_count.find(hv);
            if (it != internal_count.end() && it->second > 0) return false;
        }
        return true;
    }

    bool search_edge(size_t j) {
        tick();
        if (j == order.size()) return assign_rest(0);
        Edge e = order[j];
        Vertex u = h.tail(e), v = h.head(e);
        if (!vmap.count(u)) {
            for (Vertex cand : g.vertices()) {
                if (!candidate_ok(u, cand)) continue;
                vmap[u] = cand;
                used_hosts.insert(cand.id);
                if (search_edge(j)) return true;
                used_hosts.erase(cand.id);
                vmap.erase(u);
            }
            return false;
        }
        if (!vmap.count(v)) {
            for (Vertex cand : g.vertices()) {
                if (!candidate_ok(v, cand)) continue;
                vmap[v] = cand;
                used_hosts.insert(cand.id);
                if (search_edge(j)) return true;
                used_hosts.erase(cand.id);
                vmap.erase(v);
            }
            return false;
        }
        std::vector<Edge> cur;
        return dfs_path(j, e, vmap.at(u), vmap.at(v), cur);
    }

    // place remaining (edge-free) guest vertices
    bool assign_rest(size_t i) {
        tick();
        while (i < vorder.size() && vmap.count(vorder[i])) ++i;
        if (i == vorder.size()) return true;
        Vertex u = vorder[i];
        for (Vertex cand : g.vertices()) {
            if (!candidate_ok(u, cand)) continue;
            vmap[u] = cand;
            used_hosts.insert(cand.id);
            if (assign_rest(i + 1)) return true;
            used_hosts.erase(cand.id);
            vmap.erase(u);
        }
        return false;
    }

    // enumerate host paths for guest edge e from `at` to t
    bool dfs_path(size_t j, Edge ge, Vertex at, Vertex t, std::vector<Edge>& cur) {
        tick();
        if (at == t && !cur.empty()) {
            if (root_ok(ge, cur)) {
                for (size_t i = 0; i + 1 < cur.size(); ++i) internal_count[g.head(cur[i])]++;
                emap[ge] = EdgePath{cur, {}};
                if (search_edge(j + 1)) return true;
                emap.erase(ge);
                for (size_t i = 0; i + 1 < cur.size(); ++i) internal_count[g.head(cur[i])]--;
            }
            if (opt.strong) return false;  // continuing would put t inside the path
        }
        if (!cur.empty() && at != t && opt.strong && used_hosts.count(at.id)) return false;
        for (Edge f : g.out_edges(at)) {
            if (used_edges.count(f.id)) continue;
            if (root_forbidden(ge, f)) continue;
            used_edges.insert(f.id);
            cur.push_back(f);
            if (dfs_path(j, ge, g.head(f), t, cur)) return true;
            cur.pop_back();
            used_edges.erase(f.id);
        }
        return false;
    }

    // host roots may only be consumed by their matched guest root
    bool root_forbidden(Edge ge, Edge f) const {
        if (!opt.roots) return false;
        for (size_t i = 0; i < opt.roots->second.size(); ++i) {
            if (f == opt.roots->second[i]) {
                auto it = required_root.find(ge);
                return !(it != required_root.end() && it->second == (int)i);
            }
        }
        return false;
    }

    bool root_ok(Edge ge, const std::vector<Edge>& cur) const {
        auto it = required_root.find(ge);
        if (it == required_root.end()) return true;
        Edge want = opt.roots->second[it->second];
        return std::find(cur.begin(), cur.end(), want) != cur.end();
    }
};

}  // namespace

SearchResult find_immersion(const Digraph& guest, const Digraph& host, const SearchOptions& opt) {
    if (opt.roots && opt.roots->first.size() != opt.roots->second.size())
        throw input_error("rooted search needs equal-length root orderings");
    SearchResult res;
    Searcher s(guest, host, opt);
    try {
        bool ok = s.search_edge(0);
        res.nodes_used = s.nodes;
        if (!ok) {
            res.answer = verdict::no;
            return res;
        }
    } catch (BudgetExceeded&) {
        res.answer = verdict::inconclusive;
        res.nodes_used = s.nodes;
        return res;
    }
    res.answer = verdict::yes;
    ImmersionModel m;
    m.guest = guest;
    m.host = host;
    m.vmap = s.vmap;
    m.emap = s.emap;
    m.strong = opt.strong;
    if (opt.roots) {
        m.rooted = true;
        m.guest_roots = opt.roots->first;
        m.host_roots = opt.roots->second;
    }
    res.model = std::move(m);
    return res;
}

SplitDecomposition model_to_splits(const ImmersionModel& m) {
    ModelCheck chk = validate_model(m);
    if (!chk.ok) throw input_error("model_to_splits: invalid model (" + chk.violated + ")");
    SplitDecomposition sd;
    // image subgraph: image vertices + every path vertex and edge
    std::unordered_set<int> vs;
    for (Vertex v : m.guest.vertices()) vs.insert(m.vmap.at(v).id);
    for (Edge e : m.guest.edges())
        for (Edge f : m.emap.at(e).edges) {
            vs.insert(m.host.tail(f).id);
            vs.insert(m.host.head(f).id);
        }
    for (Vertex v : m.host.vertices())
        if (vs.count(v.id)) sd.subgraph.add_vertex(v);
    for (Edge e : m.guest.edges())
        for (Edge f : m.emap.at(e).edges)
            sd.subgraph.add_edge(f, m.host.tail(f), m.host.head(f));
    // split every image path down to a single edge, guest edge id order
    std::vector<Edge> ges = m.guest.edges();
    std::sort(ges.begin(), ges.end());
    Digraph cur = sd.subgraph;
    for (Edge e : ges) {
        auto [next, pairs] = split_along_path(cur, m.emap.at(e));
        cur = std::move(next);
        sd.splits.insert(sd.splits.end(), pairs.begin(), pairs.end());
    }
    return sd;
}

ImmersionModel splits_to_model(const Digraph& g, const Digraph& subgraph,
                               const std::vector<std::pair<Edge, Edge>>& splits) {
    for (Edge e : subgraph.edges())
        if (!g.has_edge(e) || g.tail(e) != subgraph.tail(e) || g.head(e) != subgraph.head(e))
            throw input_error("splits_to_model: subgraph is not a subgraph of g");
    Digraph cur = subgraph;
    EdgeMap<EdgePath> track;
    for (Edge e : subgraph.edges()) track[e] = EdgePath{{e}, {}};
    for (auto [a, b] : splits) {
        if (!cur.has_edge(a) || !cur.has_edge(b)) throw input_error("splits_to_model: invalid split pair");
        EdgePath pa = track.at(a), pb = track.at(b);
        auto [next, f] = split_off(cur, a, b);
        cur = std::move(next);
        track.erase(a);
        track.erase(b);
        track[f] = concat(g, pa, pb);
    }
    ImmersionModel m;
    m.guest = cur;
    m.host = g;
    for (Vertex v : cur.vertices()) m.vmap[v] = v;
    for (Edge e : cur.edges()) m.emap[e] = track.at(e);
    m.strong = false;
    return m;
}

ImmersionModel compose(const ImmersionModel& first, const ImmersionModel& second) {
    if (!(first.host == second.guest))
        throw input_error("compose: middle graphs differ");
    ImmersionModel m;
    m.guest = first.guest;
    m.host = second.host;
    m.strong = first.strong && second.strong;
    for (Vertex v : first.guest.vertices()) m.vmap[v] = second.vmap.at(first.vmap.at(v));
    for (Edge e : first.guest.edges()) {
        EdgePath p;
        for (Edge f : first.emap.at(e).edges) {
            const EdgePath& q = second.emap.at(f);
            p.edges.insert(p.edges.end(), q.edges.begin(), q.edges.end());
        }
        m.emap[e] = std::move(p);
    }
    if (first.rooted && second.rooted) {
        m.rooted = true;
        m.guest_roots = first.guest_roots;
        m.host_roots = second.host_roots;
    }
    return m;
}

}  // namespace euler
