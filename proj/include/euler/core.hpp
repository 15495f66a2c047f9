#ifndef EULER_CORE_HPP
#define EULER_CORE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace euler {

// Thrown on malformed input / violated preconditions. The CLI maps it to exit 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tri-state answer for exhaustive procedures with a budget.
enum class verdict { yes, no, inconclusive };

// Vertices and edges are stand-alone objects with stable integer ids.
// The two id spaces are unrelated; keeping them as distinct types stops
// a vertex id from ever being used where an edge id is expected.
struct Vertex {
    int id = -1;
    friend bool operator==(Vertex a, Vertex b) { return a.id == b.id; }
    friend bool operator!=(Vertex a, Vertex b) { return a.id != b.id; }
    friend bool operator<(Vertex a, Vertex b) { return a.id < b.id; }
};

struct Edge {
    int id = -1;
    friend bool operator==(Edge a, Edge b) { return a.id == b.id; }
    friend bool operator!=(Edge a, Edge b) { return a.id != b.id; }
    friend bool operator<(Edge a, Edge b) { return a.id < b.id; }
};

struct VertexHash {
    size_t operator()(Vertex v) const { return std::hash<int>()(v.id); }
};
struct EdgeHash {
    size_t operator()(Edge e) const { return std::hash<int>()(e.id); }
};

template <class T> using VertexMap = std::unordered_map<Vertex, T, VertexHash>;
template <class T> using EdgeMap = std::unordered_map<Edge, T, EdgeHash>;

// Directed multigraph as an incidence structure (V, E, tail, head).
// Loops and parallel edges are allowed; ids survive subgraph extraction.
class Digraph {
public:
    Digraph() = default;

    Vertex add_vertex();
    Vertex add_vertex(Vertex v);         // explicit id, must be fresh
    Edge add_edge(Vertex tail, Vertex head);
    Edge add_edge(Edge e, Vertex tail, Vertex head);

    void remove_edge(Edge e);
    void remove_vertex(Vertex v);        // v must be isolated

    bool has_vertex(Vertex v) const { return vrec_.count(v) != 0; }
    bool has_edge(Edge e) const { return erec_.count(e) != 0; }

    Vertex tail(Edge e) const { return rec(e).tail; }
    Vertex head(Edge e) const { return rec(e).head; }
    bool is_loop(Edge e) const { return tail(e) == head(e); }

    const std::vector<Edge>& out_edges(Vertex v) const { return rec(v).out; }
    const std::vector<Edge>& in_edges(Vertex v) const { return rec(v).in; }
    std::vector<Edge> incident_edges(Vertex v) const;   // E(v), loops once
    std::vector<Edge> loops(Vertex v) const;

    int out_degree(Vertex v) const { return (int)rec(v).out.size(); }
    int in_degree(Vertex v) const { return (int)rec(v).in.size(); }
    // A loop contributes 1 to in-degree and 1 to out-degree.
    int degree(Vertex v) const { return out_degree(v) + in_degree(v); }
    int loop_count(Vertex v) const;

    const std::vector<Vertex>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int n() const { return (int)verts_.size(); }
    int m() const { return (int)edges_.size(); }

    Vertex fresh_vertex_id() const { return Vertex{next_vid_}; }
    Edge fresh_edge_id() const { return Edge{next_eid_}; }

    int max_degree() const;
    bool operator==(const Digraph& o) const;  // identical ids and incidences

private:
    struct VRec {
        std::vector<Edge> out, in;
    };
    struct ERec {
        Vertex tail, head;
    };
    const VRec& rec(Vertex v) const;
    VRec& rec(Vertex v);
    const ERec& rec(Edge e) const;

    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;
    VertexMap<VRec> vrec_;
    EdgeMap<ERec> erec_;
    int next_vid_ = 0;
    int next_eid_ = 0;
};

// Undirected multigraph, used for carving trees, grids and treewidth.
class UndirectedGraph {
public:
    Vertex add_vertex();
    Vertex add_vertex(Vertex v);
    Edge add_edge(Vertex a, Vertex b);
    Edge add_edge(Edge e, Vertex a, Vertex b);
    void remove_edge(Edge e);
    void remove_vertex(Vertex v);  // must be isolated

    bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
    bool has_edge(Edge e) const { return ends_.count(e) != 0; }
    std::pair<Vertex, Vertex> ends(Edge e) const;
    Vertex other_end(Edge e, Vertex v) const;
    const std::vector<Edge>& incident(Vertex v) const;
    int degree(Vertex v) const { return (int)incident(v).size(); }  // loop counts 2

    const std::vector<Vertex>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int n() const { return (int)verts_.size(); }
    int m() const { return (int)edges_.size(); }
    std::vector<Vertex> neighbors(Vertex v) const;

private:
    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;
    VertexMap<std::vector<Edge>> adj_;
    EdgeMap<std::pair<Vertex, Vertex>> ends_;
    int next_vid_ = 0;
    int next_eid_ = 0;
};

// A path is a sequence of distinct edges chained head-to-tail; vertices may
// repeat. Zero-length paths carry their single vertex in `anchor`.
struct EdgePath {
    std::vector<Edge> edges;
    Vertex anchor{};  // meaningful only when edges is empty

    bool trivial() const { return edges.empty(); }
    int length() const { return (int)edges.size(); }
    Edge first() const { return edges.front(); }
    Edge last() const { return edges.back(); }

    Vertex source(const Digraph& g) const { return trivial() ? anchor : g.tail(edges.front()); }
    Vertex target(const Digraph& g) const { return trivial() ? anchor : g.head(edges.back()); }

    // Internal vertices v_1..v_{m-1}; empty for length <= 1.
    std::vector<Vertex> internal_vertices(const Digraph& g) const;

    bool valid(const Digraph& g) const;
    bool is_linear(const Digraph& g) const;      // internal vertices pairwise distinct
    bool is_cycle(const Digraph& g) const;       // closed, length >= 1
    bool is_circle(const Digraph& g) const;      // closed and all visited vertices distinct

    static EdgePath trivial_at(Vertex v) { return EdgePath{{}, v}; }
    friend bool operator==(const EdgePath& a, const EdgePath& b) {
        return a.edges == b.edges && (!a.edges.empty() || a.anchor == b.anchor);
    }
};

// (first edge, last edge) of a path.
using PathType = std::pair<Edge, Edge>;
inline PathType path_type(const EdgePath& p) {
    if (p.trivial()) throw input_error("path type undefined for zero-length paths");
    return {p.first(), p.last()};
}

// Cut induced by a vertex set X: rho(X) with its two directions.
struct VertexCut {
    std::vector<Vertex> side;        // X, sorted
    std::vector<Edge> rho_plus;      // tail in X, head outside
    std::vector<Edge> rho_minus;     // head in X, tail outside
    int order() const { return (int)(rho_plus.size() + rho_minus.size()); }
    std::vector<Edge> rho() const;
};

bool is_eulerian(const Digraph& g);
bool is_eulerian_vertex(const Digraph& g, Vertex v);
bool is_weakly_connected(const Digraph& g);

VertexCut induced_cut(const Digraph& g, std::span<const Vertex> x);
VertexCut induced_cut(const Digraph& g, const std::vector<Vertex>& x);

// Splitting off the composable pair (e, e2) at v = head(e) = tail(e2):
// both edges are replaced by one fresh edge tail(e) -> head(e2); v is removed
// if it ends up isolated.
std::pair<Digraph, Edge> split_off(const Digraph& g, Edge e, Edge e2);

// Split along an ordered list of 2-paths, with the paper's inductive renaming:
// if a later pair mentions an edge consumed by an earlier split, the name
// follows the fresh replacement edge.
Digraph split_along(const Digraph& g, const std::vector<std::pair<Edge, Edge>>& pairs);

// Splitting a path (e_1..e_m) down to a single edge; returns the final graph
// and the expanded pair list (with fresh intermediate names already resolved).
std::pair<Digraph, std::vector<std::pair<Edge, Edge>>> split_along_path(const Digraph& g,
                                                                        const EdgePath& p);

// Edge-disjoint cycles covering E(g) exactly; g must be Eulerian.
std::vector<EdgePath> cycle_cover(const Digraph& g);

// P1 ∘ P2 per the two composable cases (shared end edge, or head-to-tail).
EdgePath concat(const Digraph& g, const EdgePath& p, const EdgePath& q);

// Subgraph induced by a vertex set (keeps edges with both ends inside).
Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> x);

std::vector<std::vector<Vertex>> weak_components(const Digraph& g);

}  // namespace euler

#endif
