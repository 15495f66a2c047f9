#include "euler/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace euler {

namespace {

struct CanonCtx {
    int n = 0;
    std::vector<std::vector<int>> cnt;              // cnt[u][v] = #edges u->v
    std::vector<std::vector<long long>> root_sig;   // per vertex: root incidences
    std::vector<std::pair<int, int>> root_ends;     // per root position: (tail,head) dense
    long long nodes = 0;
    long long budget = 2'000'000;
    std::string best;
    bool have_best = false;

    // refine colors until stable; colors are dense ranks of sorted signatures
    void refine(std::vector<int>& color) const {
        while (true) {
            std::vector<std::vector<long long>> sig(n);
            for (int u = 0; u < n; ++u) {
                sig[u].push_back(color[u]);
                std::vector<std::pair<long long, long long>> nb;
                for (int v = 0; v < n; ++v) {
                    if (cnt[u][v]) nb.push_back({color[v] * 2LL, cnt[u][v]});
                    if (cnt[v][u]) nb.push_back({color[v] * 2LL + 1, cnt[v][u]});
                }
                std::sort(nb.begin(), nb.end());
                for (auto [a, b] : nb) {
                    sig[u].push_back(a);
                    sig[u].push_back(b);
                }
            }
            std::map<std::vector<long long>, int> rank;
            for (int u = 0; u < n; ++u) rank[sig[u]] = 0;
            int r = 0;
            for (auto& kv : rank) kv.second = r++;
            std::vector<int> nc(n);
            bool changed = false;
            for (int u = 0; u < n; ++u) {
                nc[u] = rank[sig[u]];
                if (nc[u] != color[u]) changed = true;
            }
            color = std::move(nc);
            if (!changed) return;
        }
    }

    std::string encode(const std::vector<int>& pos) const {
        // pos[u] = rank of dense vertex u in the ordering
        std::ostringstream os;
        os << "n" << n << ";";
        std::vector<std::tuple<int, int, int>> rows;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (cnt[u][v]) rows.push_back({pos[u], pos[v], cnt[u][v]});
        std::sort(rows.begin(), rows.end());
        for (auto [a, b, c] : rows) os << a << ">" << b << "x" << c << ";";
        for (auto [t, h] : root_ends) os << "R" << pos[t] << ">" << pos[h] << ";";
        return os.str();
    }

    void search(std::vector<int> color) {
        refine(color);
        // first non-singleton class (by color value)
        int target = -1;
        {
            std::vector<int> size(n, 0);
            for (int u = 0; u < n; ++u) size[color[u]]++;
            int bestc = -1;
            for (int u = 0; u < n; ++u)
                if (size[color[u]] > 1 && (bestc < 0 || color[u] < bestc)) bestc = color[u];
            target = bestc;
        }
        if (target < 0) {
            if (++nodes > budget) throw std::runtime_error("canonical_form: search budget exceeded");
            // discrete: colors are a permutation rank
            std::vector<int> pos(n);
            for (int u = 0; u < n; ++u) pos[u] = color[u];
            std::string code = encode(pos);
            if (!have_best || code < best) {
                best = std::move(code);
                have_best = true;
            }
            return;
        }
        for (int u = 0; u < n; ++u) {
            if (color[u] != target) continue;
            std::vector<int> c2 = color;
            // individualize u: give it a color just below its class
            for (int w = 0; w < n; ++w)
                if (w != u && c2[w] >= target) c2[w] += 1;
            search(std::move(c2));
        }
    }
};

std::string canonical_impl(const Digraph& g, const std::vector<Edge>* roots) {
    CanonCtx ctx;
    ctx.n = g.n();
    std::vector<Vertex> vs = g.vertices();
    VertexMap<int> dense;
    for (int i = 0; i < (int)vs.size(); ++i) dense[vs[i]] = i;
    ctx.cnt.assign(ctx.n, std::vector<int>(ctx.n, 0));
    for (Edge e : g.edges()) ctx.cnt[dense[g.tail(e)]][dense[g.head(e)]]++;
    ctx.root_sig.assign(ctx.n, {});
    if (roots) {
        int i = 0;
        for (Edge e : *roots) {
            if (!g.has_edge(e)) throw input_error("root edge not in graph");
            int t = dense[g.tail(e)], h = dense[g.head(e)];
            ctx.root_ends.push_back({t, h});
            ctx.root_sig[t].push_back(2LL * i);
            ctx.root_sig[h].push_back(2LL * i + 1);
            ++i;
        }
    }
    if (ctx.n == 0) return "n0;";
    // initial colors from local invariants (+ root incidence)
    std::map<std::vector<long long>, int> rank;
    std::vector<std::vector<long long>> init(ctx.n);
    for (int u = 0; u < ctx.n; ++u) {
        long long out = 0, in = 0;
        for (int v = 0; v < ctx.n; ++v) {
            out += ctx.cnt[u][v];
            in += ctx.cnt[v][u];
        }
        init[u] = {out, in, ctx.cnt[u][u]};
        init[u].insert(init[u].end(), ctx.root_sig[u].begin(), ctx.root_sig[u].end());
        rank[init[u]] = 0;
    }
    int r = 0;
    for (auto& kv : rank) kv.second = r++;
    std::vector<int> color(ctx.n);
    for (int u = 0; u < ctx.n; ++u) color[u] = rank[init[u]];
    ctx.search(std::move(color));
    std::ostringstream os;
    os << "m" << g.m() << ";" << ctx.best;
    return os.str();
}

}  // namespace

std::string canonical_form(const Digraph& g) { return canonical_impl(g, nullptr); }

std::string canonical_form(const Digraph& g, const std::vector<Edge>& roots) {
    return canonical_impl(g, &roots);
}

bool isomorphic(const Digraph& a, const Digraph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool isomorphic_rooted(const Digraph& a, const std::vector<Edge>& ra, const Digraph& b,
                       const std::vector<Edge>& rb) {
    if (a.n() != b.n() || a.m() != b.m() || ra.size() != rb.size()) return false;
    return canonical_form(a, ra) == canonical_form(b, rb);
}

}  // namespace euler
