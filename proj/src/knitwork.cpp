#include "euler/knitwork.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace euler {

void LinkMatching::normalize() {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool LinkMatching::matching_over(const std::vector<Edge>& e1, const std::vector<Edge>& e2) const {
    std::unordered_set<int> s1(0), s2(0), in1, in2;
    for (Edge e : e1) in1.insert(e.id);
    for (Edge e : e2) in2.insert(e.id);
    for (auto [a, b] : pairs) {
        if (!in1.count(a.id) || !in2.count(b.id)) return false;
        if (!s1.insert(a.id).second) return false;
        if (!s2.insert(b.id).second) return false;
    }
    return true;
}

bool operator==(const Link& a, const Link& b) {
    auto sorted = [](std::vector<Edge> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return sorted(a.e1) == sorted(b.e1) && sorted(a.e2) == sorted(b.e2) &&
           a.matchings == b.matchings;
}

LinkPredicates link_predicates(const Link& l, int side_budget) {
    LinkPredicates res;
    for (const auto& m : l.matchings)
        if (!m.matching_over(l.e1, l.e2)) throw input_error("link member is not a matching");
    // reliable: closed under single-pair removal (hence all subsets)
    res.reliable = true;
    for (const auto& m : l.matchings) {
        for (size_t i = 0; i < m.pairs.size() && res.reliable; ++i) {
            LinkMatching sub = m;
            sub.pairs.erase(sub.pairs.begin() + (long)i);
            if (!l.matchings.count(sub)) res.reliable = false;
        }
        if (!res.reliable) break;
    }
    // linkable: every pair appears somewhere
    res.linkable = true;
    for (Edge a : l.e1) {
        for (Edge b : l.e2) {
            bool found = false;
            for (const auto& m : l.matchings) {
                for (auto [x, y] : m.pairs)
                    if (x == a && y == b) found = true;
                if (found) break;
            }
            if (!found) {
                res.linkable = false;
                break;
            }
        }
        if (!res.linkable) break;
    }
    if ((int)l.e1.size() > side_budget || (int)l.e2.size() > side_budget) return res;
    // well-linked: every equal-size side-subset pair, every size-matched
    // bipartition, admits a member splitting into two perfect matchings
    int n1 = (int)l.e1.size(), n2 = (int)l.e2.size();
    res.well_linked = verdict::yes;
    for (unsigned s1 = 0; s1 < (1u << n1); ++s1) {
        for (unsigned s2 = 0; s2 < (1u << n2); ++s2) {
            if (__builtin_popcount(s1) != __builtin_popcount(s2)) continue;
            std::vector<Edge> E1p, E2p;
            for (int i = 0; i < n1; ++i)
                if (s1 & (1u << i)) E1p.push_back(l.e1[i]);
            for (int i = 0; i < n2; ++i)
                if (s2 & (1u << i)) E2p.push_back(l.e2[i]);
            int k = (int)E1p.size();
            for (unsigned x1 = 0; x1 < (1u << k); ++x1) {
                for (unsigned x2 = 0; x2 < (1u << k); ++x2) {
                    if (__builtin_popcount(x1) != __builtin_popcount(x2)) continue;
                    // X parts get x-bitted elements, Y parts the rest
                    auto part = [&](const std::vector<Edge>& all, unsigned bits, bool in) {
                        std::vector<Edge> r;
                        for (int i = 0; i < (int)all.size(); ++i)
                            if (((bits >> i) & 1u) == (in ? 1u : 0u)) r.push_back(all[i]);
                        return r;
                    };
                    std::vector<Edge> X1 = part(E1p, x1, true), Y1 = part(E1p, x1, false);
                    std::vector<Edge> X2 = part(E2p, x2, true), Y2 = part(E2p, x2, false);
                    bool found = false;
                    for (const auto& m : l.matchings) {
                        // m must be exactly a perfect X1-X2 matching plus a
                        // perfect Y1-Y2 matching
                        LinkMatching mx, my;
                        bool ok = true;
                        for (auto [a, b] : m.pairs) {
                            bool a1 = std::find(X1.begin(), X1.end(), a) != X1.end();
                            bool b1 = std::find(X2.begin(), X2.end(), b) != X2.end();
                            bool a2 = std::find(Y1.begin(), Y1.end(), a) != Y1.end();
                            bool b2 = std::find(Y2.begin(), Y2.end(), b) != Y2.end();
                            if (a1 && b1) mx.pairs.push_back({a, b});
                            else if (a2 && b2) my.pairs.push_back({a, b});
                            else {
                                ok = false;
                                break;
                            }
                        }
                        if (!ok) continue;
                        if ((int)mx.pairs.size() == (int)X1.size() &&
                            (int)my.pairs.size() == (int)Y1.size()) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        res.well_linked = verdict::no;
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

Link all_matchings_link(std::vector<Edge> e1, std::vector<Edge> e2, int side_budget) {
    if ((int)e1.size() > side_budget || (int)e2.size() > side_budget)
        throw input_error("all_matchings_link: sides too large");
    Link l;
    l.e1 = e1;
    l.e2 = e2;
    // grow by adding one pair at a time
    std::vector<LinkMatching> frontier{LinkMatching{}};
    l.matchings.insert(LinkMatching{});
    while (!frontier.empty()) {
        std::vector<LinkMatching> next;
        for (const auto& m : frontier) {
            for (Edge a : e1) {
                for (Edge b : e2) {
                    LinkMatching grown = m;
                    grown.pairs.push_back({a, b});
                    grown.normalize();
                    if (!grown.matching_over(e1, e2)) continue;
                    if (l.matchings.insert(grown).second) next.push_back(grown);
                }
            }
        }
        frontier = std::move(next);
    }
    return l;
}

void check_rooted(const RootedDigraph& rd) {
    std::unordered_set<int> seen;
    for (Edge e : rd.roots) {
        if (!rd.graph.has_edge(e)) throw input_error("root edge missing from graph");
        if (!seen.insert(e.id).second) throw input_error("duplicate root edge");
    }
    for (Vertex v : rd.side)
        if (!rd.graph.has_vertex(v)) throw input_error("root side vertex missing from graph");
    auto cut = induced_cut(rd.graph, rd.side);
    std::set<int> want, got;
    for (Edge e : rd.roots) want.insert(e.id);
    for (Edge e : cut.rho()) got.insert(e.id);
    if (want != got) throw input_error("roots are not the cut induced by the root side");
}

namespace {

bool contains_vertex(const std::vector<Vertex>& vs, Vertex v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

void check_cut_ordering(const Digraph& g, const std::vector<Vertex>& y,
                        const std::vector<Edge>& pi_y) {
    auto cut = induced_cut(g, y);
    std::set<int> want, got;
    for (Edge e : cut.rho()) want.insert(e.id);
    std::unordered_set<int> dup;
    for (Edge e : pi_y) {
        got.insert(e.id);
        if (!dup.insert(e.id).second) throw input_error("ordering repeats an edge");
    }
    if (want != got) throw input_error("ordering is not a permutation of the induced cut");
}

}  // namespace

StitchResult stitch(const RootedDigraph& g, const std::vector<Vertex>& y,
                    const std::vector<Edge>& pi_y, StitchDir dir) {
    check_rooted(g);
    if (!is_eulerian(g.graph)) throw input_error("stitch requires an Eulerian digraph");
    for (Vertex v : g.side)
        if (!contains_vertex(y, v)) throw input_error("y is not a rooted cut (side not inside)");
    check_cut_ordering(g.graph, y, pi_y);
    std::unordered_set<int> in_y;
    for (Vertex v : y) in_y.insert(v.id);

    StitchResult res;
    Vertex star = g.graph.fresh_vertex_id();
    res.stitch_vertex = star;
    Digraph& h = res.rooted.graph;
    if (dir == StitchDir::down) {
        for (Vertex v : g.graph.vertices())
            if (in_y.count(v.id)) h.add_vertex(v);
        h.add_vertex(star);
        for (Edge e : g.graph.edges()) {
            bool t = in_y.count(g.graph.tail(e).id), hd = in_y.count(g.graph.head(e).id);
            if (t && hd) h.add_edge(e, g.graph.tail(e), g.graph.head(e));
            else if (t) h.add_edge(e, g.graph.tail(e), star);
            else if (hd) h.add_edge(e, star, g.graph.head(e));
        }
        res.rooted.roots = g.roots;
        res.rooted.side = g.side;
    } else {
        for (Vertex v : g.graph.vertices())
            if (!in_y.count(v.id)) h.add_vertex(v);
        h.add_vertex(star);
        for (Edge e : g.graph.edges()) {
            bool t = in_y.count(g.graph.tail(e).id), hd = in_y.count(g.graph.head(e).id);
            if (!t && !hd) h.add_edge(e, g.graph.tail(e), g.graph.head(e));
            else if (!t && hd) h.add_edge(e, g.graph.tail(e), star);
            else if (t && !hd) h.add_edge(e, star, g.graph.head(e));
        }
        res.rooted.roots = pi_y;
        res.rooted.side = {star};
    }
    check_rooted(res.rooted);
    if (!is_eulerian(res.rooted.graph)) throw input_error("stitch result not Eulerian");
    return res;
}

RootedDigraph knit(const RootedDigraph& g2, const RootedDigraph& g1,
                   const std::vector<Vertex>& y, const std::vector<Edge>& pi_y) {
    check_rooted(g1);
    check_rooted(g2);
    if (!is_eulerian(g1.graph) || !is_eulerian(g2.graph))
        throw input_error("knit requires Eulerian digraphs");
    for (Vertex v : g1.side)
        if (!contains_vertex(y, v)) throw input_error("y is not a rooted cut of g1");
    check_cut_ordering(g1.graph, y, pi_y);
    if (pi_y.size() != g2.roots.size()) throw input_error("knit: index mismatch");

    std::unordered_set<int> in_y, in_x2;
    for (Vertex v : y) in_y.insert(v.id);
    for (Vertex v : g2.side) in_x2.insert(v.id);

    // orientation compatibility: e_i^1 leaves Y iff e_i^2 leaves X2
    for (size_t i = 0; i < pi_y.size(); ++i) {
        bool out1 = in_y.count(g1.graph.tail(pi_y[i]).id) != 0;
        bool out2 = in_x2.count(g2.graph.tail(g2.roots[i]).id) != 0;
        if (out1 != out2) throw input_error("knit: orientation mismatch at position " + std::to_string(i));
    }

    RootedDigraph res;
    Digraph& h = res.graph;
    for (Vertex v : g1.graph.vertices())
        if (in_y.count(v.id)) h.add_vertex(v);
    for (Vertex v : g2.graph.vertices())
        if (!in_x2.count(v.id)) {
            if (h.has_vertex(v)) throw input_error("knit: vertex id collision between parts");
            h.add_vertex(v);
        }
    for (Edge e : g1.graph.edges())
        if (in_y.count(g1.graph.tail(e).id) && in_y.count(g1.graph.head(e).id))
            h.add_edge(e, g1.graph.tail(e), g1.graph.head(e));
    for (Edge e : g2.graph.edges())
        if (!in_x2.count(g2.graph.tail(e).id) && !in_x2.count(g2.graph.head(e).id)) {
            if (h.has_edge(e)) throw input_error("knit: edge id collision between parts");
            h.add_edge(e, g2.graph.tail(e), g2.graph.head(e));
        }
    // merged cut edges; ids reuse e_i^1 when possible
    std::vector<Edge> merged;
    for (size_t i = 0; i < pi_y.size(); ++i) {
        Edge e1 = pi_y[i], e2 = g2.roots[i];
        Edge id = e1;
        if (h.has_edge(id) && !(e1 == e2)) id = e2;
        if (h.has_edge(id)) id = h.fresh_edge_id();
        bool out = in_y.count(g1.graph.tail(e1).id) != 0;
        if (out)
            h.add_edge(id, g1.graph.tail(e1), g2.graph.head(e2));
        else
            h.add_edge(id, g2.graph.tail(e2), g1.graph.head(e1));
        merged.push_back(id);
    }
    // roots: g1's, renaming any root lying in the knitted cut
    for (Edge r : g1.roots) {
        Edge out = r;
        for (size_t i = 0; i < pi_y.size(); ++i)
            if (pi_y[i] == r) out = merged[i];
        res.roots.push_back(out);
    }
    res.side = g1.side;
    check_rooted(res);
    if (!is_eulerian(res.graph)) throw input_error("knit result not Eulerian");
    return res;
}

namespace {

struct FeasibleSearch {
    const Digraph& g;
    std::vector<Edge> ins, outs;          // rho^-(X), rho^+(X)
    std::unordered_set<int> inner;        // E(G[X])
    std::unordered_set<int> in_x;
    EdgeMap<bool> used;
    std::int64_t nodes = 0;
    std::int64_t budget;
    std::set<LinkMatching> found;
    LinkMatching current;

    void tick() {
        if (++nodes > budget) throw std::overflow_error("budget");
    }

    void decide(size_t i) {
        tick();
        if (i == ins.size()) {
            LinkMatching m = current;
            m.normalize();
            found.insert(std::move(m));
            return;
        }
        decide(i + 1);  // skip this in-edge
        Edge e = ins[i];
        std::unordered_set<int> visited;  // linear paths suffice for types
        walk(i, g.head(e), visited);
    }

    void walk(size_t i, Vertex at, std::unordered_set<int>& visited) {
        tick();
        // close with any unused out-edge leaving `at`
        for (Edge f : outs) {
            if (used.count(f)) continue;
            if (g.tail(f) == at) {
                used[f] = true;
                current.pairs.push_back({ins[i], f});
                decide(i + 1);
                current.pairs.pop_back();
                used.erase(f);
            }
        }
        if (!visited.insert(at.id).second) return;
        for (Edge f : g.out_edges(at)) {
            if (!inner.count(f.id) || used.count(f)) continue;
            used[f] = true;
            walk(i, g.head(f), visited);
            used.erase(f);
        }
        visited.erase(at.id);
    }
};

}  // namespace

FeasibleTypes feasible_types(const Digraph& g, const std::vector<Vertex>& x,
                             std::int64_t budget_nodes) {
    FeasibleTypes res;
    auto cut = induced_cut(g, x);
    FeasibleSearch fs{g, cut.rho_minus, cut.rho_plus, {}, {}, {}, 0, budget_nodes, {}, {}};
    std::sort(fs.ins.begin(), fs.ins.end());
    std::sort(fs.outs.begin(), fs.outs.end());
    for (Vertex v : x) fs.in_x.insert(v.id);
    for (Edge e : g.edges())
        if (fs.in_x.count(g.tail(e).id) && fs.in_x.count(g.head(e).id)) fs.inner.insert(e.id);
    try {
        fs.decide(0);
    } catch (std::overflow_error&) {
        return res;  // inconclusive
    }
    res.answer = verdict::yes;
    res.link.e1 = fs.ins;
    res.link.e2 = fs.outs;
    res.link.matchings = std::move(fs.found);
    return res;
}

void check_knitwork(const Knitwork& k) {
    check_rooted(k.rooted);
    const Digraph& g = k.rooted.graph;
    for (auto& [v, ord] : k.mu) {
        if (!g.has_vertex(v)) throw input_error("mu was set on an unknown vertex");
        auto cut = induced_cut(g, std::vector<Vertex>{v});
        std::set<int> want, got;
        for (Edge e : cut.rho()) want.insert(e.id);
        for (Edge e : ord) got.insert(e.id);
        if (want != got || ord.size() != want.size())
            throw input_error("mu(v) is not a permutation of rho(v)");
    }
    for (auto& [v, link] : k.mm) {
        if (!k.mu.count(v)) throw input_error("dom(mm) must lie inside dom(mu)");
        auto cut = induced_cut(g, std::vector<Vertex>{v});
        auto sorted = [](std::vector<Edge> es) {
            std::sort(es.begin(), es.end());
            return es;
        };
        if (sorted(link.e1) != sorted(cut.rho_minus) || sorted(link.e2) != sorted(cut.rho_plus))
            throw input_error("mm(v) sides must be (rho^-(v), rho^+(v))");
        auto pred = link_predicates(link);
        if (!pred.reliable) throw input_error("mm(v) must be a reliable link");
    }
    for (auto& [v, label] : k.phi)
        if (!g.has_vertex(v)) throw input_error("phi was set on an unknown vertex");
}

bool knitworks_equal(const Knitwork& a, const Knitwork& b) {
    if (!(a.rooted.graph == b.rooted.graph)) return false;
    if (a.rooted.roots != b.rooted.roots) return false;
    auto sorted = [](std::vector<Vertex> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(a.rooted.side) != sorted(b.rooted.side)) return false;
    if (a.mu.size() != b.mu.size() || a.mm.size() != b.mm.size() || a.phi.size() != b.phi.size())
        return false;
    for (auto& [v, ord] : a.mu) {
        auto it = b.mu.find(v);
        if (it == b.mu.end() || it->second != ord) return false;
    }
    for (auto& [v, link] : a.mm) {
        auto it = b.mm.find(v);
        if (it == b.mm.end() || !(it->second == link)) return false;
    }
    for (auto& [v, label] : a.phi) {
        auto it = b.phi.find(v);
        if (it == b.phi.end() || it->second != label) return false;
    }
    return true;
}

KnitworkStitchResult stitch_knitwork(const Knitwork& k, const std::vector<Vertex>& y,
                                     const std::vector<Edge>& pi_y, StitchDir dir,
                                     std::int64_t budget_nodes) {
    check_knitwork(k);
    KnitworkStitchResult res;
    StitchResult base = stitch(k.rooted, y, pi_y, dir);
    res.stitch_vertex = base.stitch_vertex;
    res.knitwork.rooted = std::move(base.rooted);
    std::unordered_set<int> in_y;
    for (Vertex v : y) in_y.insert(v.id);
    bool keep_inside = dir == StitchDir::down;
    for (auto& [v, ord] : k.mu)
        if (in_y.count(v.id) == (keep_inside ? 1u : 0u)) res.knitwork.mu[v] = ord;
    for (auto& [v, link] : k.mm)
        if (in_y.count(v.id) == (keep_inside ? 1u : 0u)) res.knitwork.mm[v] = link;
    for (auto& [v, label] : k.phi)
        if (in_y.count(v.id) == (keep_inside ? 1u : 0u)) res.knitwork.phi[v] = label;
    res.knitwork.mu[res.stitch_vertex] = pi_y;
    if (dir == StitchDir::down) {
        // the down-stitch vertex represents the contracted complement side:
        // its feasible routings are computed in the original graph
        std::vector<Vertex> ybar;
        for (Vertex v : k.rooted.graph.vertices())
            if (!in_y.count(v.id)) ybar.push_back(v);
        FeasibleTypes ft = feasible_types(k.rooted.graph, ybar, budget_nodes);
        if (ft.answer != verdict::yes) return res;  // inconclusive
        res.knitwork.mm[res.stitch_vertex] = std::move(ft.link);
    }
    res.answer = verdict::yes;
    check_knitwork(res.knitwork);
    return res;
}

namespace {

std::vector<Edge> rename_ordering(const std::vector<Edge>& ord, const EdgeMap<Edge>& ren) {
    std::vector<Edge> out;
    for (Edge e : ord) {
        auto it = ren.find(e);
        out.push_back(it == ren.end() ? e : it->second);
    }
    return out;
}

Link rename_link(const Link& l, const EdgeMap<Edge>& ren) {
    Link out;
    out.e1 = rename_ordering(l.e1, ren);
    out.e2 = rename_ordering(l.e2, ren);
    for (const auto& m : l.matchings) {
        LinkMatching nm;
        for (auto [a, b] : m.pairs) {
            auto ia = ren.find(a);
            auto ib = ren.find(b);
            nm.pairs.push_back({ia == ren.end() ? a : ia->second, ib == ren.end() ? b : ib->second});
        }
        nm.normalize();
        out.matchings.insert(std::move(nm));
    }
    return out;
}

}  // namespace

Knitwork knit_knitwork(const Knitwork& k2, const Knitwork& k1, const std::vector<Vertex>& y,
                       const std::vector<Edge>& pi_y) {
    check_knitwork(k1);
    check_knitwork(k2);
    Knitwork res;
    res.rooted = knit(k2.rooted, k1.rooted, y, pi_y);
    // rename maps for the merged cut edges on both sides
    EdgeMap<Edge> ren1, ren2;
    {
        // recover merged ids: the i-th root position of g2 and pi_y[i] merged;
        // replay the id rule used by knit()
        std::unordered_set<int> have;
        for (Edge e : res.rooted.graph.edges()) have.insert(e.id);
        // the merged edge is the unique edge of the result joining the two
        // incident endpoints; recompute directly instead
    }
    std::unordered_set<int> in_y, in_x2;
    for (Vertex v : y) in_y.insert(v.id);
    for (Vertex v : k2.rooted.side) in_x2.insert(v.id);
    {
        // replay knit's merged-id choice
        Digraph probe;
        for (Vertex v : k1.rooted.graph.vertices())
            if (in_y.count(v.id)) probe.add_vertex(v);
        for (Vertex v : k2.rooted.graph.vertices())
            if (!in_x2.count(v.id)) probe.add_vertex(v);
        for (Edge e : k1.rooted.graph.edges())
            if (in_y.count(k1.rooted.graph.tail(e).id) && in_y.count(k1.rooted.graph.head(e).id))
                probe.add_edge(e, k1.rooted.graph.tail(e), k1.rooted.graph.head(e));
        for (Edge e : k2.rooted.graph.edges())
            if (!in_x2.count(k2.rooted.graph.tail(e).id) && !in_x2.count(k2.rooted.graph.head(e).id))
                probe.add_edge(e, k2.rooted.graph.tail(e), k2.rooted.graph.head(e));
        for (size_t i = 0; i < pi_y.size(); ++i) {
            Edge e1 = pi_y[i], e2 = k2.rooted.roots[i];
            Edge id = e1;
            if (probe.has_edge(id) && !(e1 == e2)) id = e2;
            if (probe.has_edge(id)) id = probe.fresh_edge_id();
            bool out = in_y.count(k1.rooted.graph.tail(e1).id) != 0;
            if (out)
                probe.add_edge(id, k1.rooted.graph.tail(e1), k2.rooted.graph.head(e2));
            else
                probe.add_edge(id, k2.rooted.graph.tail(e2), k1.rooted.graph.head(e1));
            if (!(id == e1)) ren1[e1] = id;
            if (!(id == e2)) ren2[e2] = id;
        }
    }
    for (auto& [v, ord] : k1.mu)
        if (in_y.count(v.id)) res.mu[v] = rename_ordering(ord, ren1);
    for (auto& [v, ord] : k2.mu)
        if (!in_x2.count(v.id)) res.mu[v] = rename_ordering(ord, ren2);
    for (auto& [v, link] : k1.mm)
        if (in_y.count(v.id)) res.mm[v] = rename_link(link, ren1);
    for (auto& [v, link] : k2.mm)
        if (!in_x2.count(v.id)) res.mm[v] = rename_link(link, ren2);
    for (auto& [v, label] : k1.phi)
        if (in_y.count(v.id)) res.phi[v] = label;
    for (auto& [v, label] : k2.phi)
        if (!in_x2.count(v.id)) res.phi[v] = label;
    check_knitwork(res);
    return res;
}

LinkMatching matching_of_linkage(const Digraph& g, const std::vector<EdgePath>& paths, Vertex v) {
    LinkMatching m;
    for (const auto& p : paths) {
        for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
            Edge a = p.edges[i], b = p.edges[i + 1];
            if (g.head(a) == v && g.tail(b) == v && !g.is_loop(a) && !g.is_loop(b))
                m.pairs.push_back({a, b});
        }
    }
    m.normalize();
    return m;
}

LinkMatching matching_of_immersion(const ImmersionModel& mdl, Vertex host_vertex) {
    std::vector<EdgePath> paths;
    for (Edge e : mdl.guest.edges()) paths.push_back(mdl.emap.at(e));
    return matching_of_linkage(mdl.host, paths, host_vertex);
}

KnitworkImmersionCheck validate_knitwork_immersion(const ImmersionModel& gamma,
                                                   const Knitwork& from, const Knitwork& to,
                                                   bool strong, const LabelOrder& order) {
    check_knitwork(from);
    check_knitwork(to);
    if (!(gamma.guest == from.rooted.graph) || !(gamma.host == to.rooted.graph))
        throw input_error("candidate map does not connect the two knitworks");
    auto fail = [](int cond, std::string why) {
        return KnitworkImmersionCheck{false, cond, std::move(why)};
    };
    // 1. rooted (strong) immersion respecting the root orders
    {
        ImmersionModel m = gamma;
        m.strong = strong;
        m.rooted = true;
        m.guest_roots = from.rooted.roots;
        m.host_roots = to.rooted.roots;
        if (m.guest_roots.size() != m.host_roots.size())
            return fail(1, "root index mismatch");
        auto chk = validate_model(m);
        if (!chk.ok) return fail(1, chk.violated);
    }
    const Digraph& h = from.rooted.graph;
    // 2. domain correspondence for mu and mm
    for (Vertex v : h.vertices()) {
        Vertex w = gamma.vmap.at(v);
        if ((from.mu.count(v) != 0) != (to.mu.count(w) != 0))
            return fail(2, "dom(mu) correspondence at vertex " + std::to_string(v.id));
        if ((from.mm.count(v) != 0) != (to.mm.count(w) != 0))
            return fail(2, "dom(mm) correspondence at vertex " + std::to_string(v.id));
    }
    // 3. mu indices agree and the i-th host interface edge rides on the i-th image
    for (auto& [v, ord] : from.mu) {
        Vertex w = gamma.vmap.at(v);
        const auto& ordw = to.mu.at(w);
        if (ord.size() != ordw.size()) return fail(3, "mu index mismatch at vertex " + std::to_string(v.id));
        for (size_t i = 0; i < ord.size(); ++i) {
            const EdgePath& p = gamma.emap.at(ord[i]);
            if (std::find(p.edges.begin(), p.edges.end(), ordw[i]) == p.edges.end())
                return fail(3, "mu edge not on matching image path at vertex " + std::to_string(v.id));
        }
    }
    // 4. routing through untouched handler vertices must be a feasible matching
    {
        std::unordered_set<int> image_of_dom_mm;
        for (auto& [v, link] : from.mm) image_of_dom_mm.insert(gamma.vmap.at(v).id);
        for (auto& [w, link] : to.mm) {
            if (image_of_dom_mm.count(w.id)) continue;
            LinkMatching mg = matching_of_immersion(gamma, w);
            if (!link.matchings.count(mg))
                return fail(4, "infeasible routing through vertex " + std::to_string(w.id));
        }
    }
    // 5. handler links correspond under the mu index translation
    for (auto& [v, link] : from.mm) {
        Vertex w = gamma.vmap.at(v);
        const Link& linkw = to.mm.at(w);
        const auto& ord = from.mu.at(v);
        const auto& ordw = to.mu.at(w);
        EdgeMap<Edge> tr;
        for (size_t i = 0; i < ord.size(); ++i) tr[ord[i]] = ordw[i];
        Link translated = rename_link(link, tr);
        translated.e1 = linkw.e1;
        translated.e2 = linkw.e2;
        if (!(translated.matchings == linkw.matchings))
            return fail(5, "mm mismatch at vertex " + std::to_string(v.id));
    }
    // 6. labels respect the quasi-order
    for (auto& [v, label] : from.phi) {
        Vertex w = gamma.vmap.at(v);
        auto it = to.phi.find(w);
        if (it == to.phi.end()) return fail(6, "label missing at image of vertex " + std::to_string(v.id));
        if (!order(label, it->second)) return fail(6, "label order violated at vertex " + std::to_string(v.id));
    }
    return {};
}

ImmersionModel knit_immersions(const ImmersionModel& gamma_d, const ImmersionModel& gamma_u,
                               const Knitwork& from, const std::vector<Vertex>& b,
                               const std::vector<Edge>& pi_b, const Knitwork& to,
                               const std::vector<Vertex>& y, const std::vector<Edge>& pi_y) {
    // reconstruct the four stitches and check the hypotheses
    StitchResult hb = stitch(from.rooted, b, pi_b, StitchDir::down);
    StitchResult hB = stitch(from.rooted, b, pi_b, StitchDir::up);
    StitchResult gy = stitch(to.rooted, y, pi_y, StitchDir::down);
    StitchResult gY = stitch(to.rooted, y, pi_y, StitchDir::up);
    if (!(gamma_d.guest == hb.rooted.graph) || !(gamma_d.host == gy.rooted.graph))
        throw input_error("gamma_d does not map the down-stitches");
    if (!(gamma_u.guest == hB.rooted.graph) || !(gamma_u.host == gY.rooted.graph))
        throw input_error("gamma_u does not map the up-stitches");
    if (pi_b.size() != pi_y.size()) throw input_error("cut index mismatch");
    if (!(gamma_d.vmap.at(hb.stitch_vertex) == gy.stitch_vertex))
        throw input_error("gamma_d must map the down-stitch vertex to the down-stitch vertex");
    if (!(gamma_u.vmap.at(hB.stitch_vertex) == gY.stitch_vertex))
        throw input_error("gamma_u must map the up-stitch vertex to the up-stitch vertex");

    const Digraph& h = from.rooted.graph;
    const Digraph& g = to.rooted.graph;
    std::unordered_set<int> in_b;
    for (Vertex v : b) in_b.insert(v.id);

    ImmersionModel res;
    res.guest = h;
    res.host = g;
    res.strong = gamma_d.strong && gamma_u.strong;
    res.rooted = true;
    res.guest_roots = from.rooted.roots;
    res.host_roots = to.rooted.roots;
    for (Vertex v : h.vertices())
        res.vmap[v] = in_b.count(v.id) ? gamma_d.vmap.at(v) : gamma_u.vmap.at(v);
    std::unordered_set<int> cut_edges;
    for (Edge e : pi_b) cut_edges.insert(e.id);
    for (Edge e : h.edges()) {
        if (!cut_edges.count(e.id)) {
            bool inside = in_b.count(h.tail(e).id) != 0;
            res.emap[e] = inside ? gamma_d.emap.at(e) : gamma_u.emap.at(e);
            continue;
        }
        // images of cut edges glue along their shared host cut edge
        const EdgePath& pd = gamma_d.emap.at(e);
        const EdgePath& pu = gamma_u.emap.at(e);
        bool leaves_b = in_b.count(h.tail(e).id) != 0;
        res.emap[e] = leaves_b ? concat(g, pd, pu) : concat(g, pu, pd);
    }
    auto chk = validate_model(res);
    if (!chk.ok) throw input_error("knitted immersion does not validate: " + chk.violated);
    return res;
}

}  // namespace euler
