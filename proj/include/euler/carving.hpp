#ifndef EULER_CARVING_HPP
#define EULER_CARVING_HPP

#include <optional>
#include <string>
#include <vector>

#include "euler/core.hpp"

namespace euler {

// Carving: unrooted cubic tree plus an injective labeling of part of its
// leaves by graph vertices. Unlabeled filler leaves are permitted.
struct Carving {
    UndirectedGraph tree;
    VertexMap<Vertex> label;  // graph vertex -> tree leaf

    std::vector<Vertex> leaves() const;
    // graph vertices hanging on the side of `te` containing tree vertex `side`
    std::vector<Vertex> side_vertices(Edge te, Vertex side) const;
};

// Structural validity: tree is a tree, vertices have degree 1 or 3 (or the
// tree is a single vertex), labels are injective into leaves, every graph
// vertex is labeled.
bool valid_carving(const Carving& c, const Digraph& g, std::string* why = nullptr);

// epsilon of a tree edge: the cut induced by the labels on one side.
VertexCut carving_cut(const Carving& c, const Digraph& g, Edge te);
int carving_width(const Carving& c, const Digraph& g);

struct WidthResult {
    verdict answer = verdict::inconclusive;
    int width = -1;
    std::optional<Carving> witness;
};

// Exact carving width by branch-and-bound over leaf-insertion sequences.
// Exhaustive while n(g) <= max_n; otherwise inconclusive.
WidthResult carving_width_exact(const Digraph& g, int max_n = 12);

// Linkedness per tree-edge pairs: minimum width along the connecting path
// equals the true minimum separating cut between the hanging vertex sets.
struct LinkedCheck {
    bool linked = true;
    Edge e1{-1}, e2{-1};  // first unlinked pair when !linked
};
LinkedCheck is_linked(const Carving& c, const Digraph& g);

// A linked carving of optimal width (exists for Eulerian digraphs).
WidthResult find_linked_optimal(const Digraph& g, int max_n = 10);

// X with rho(X) = roots (as sets), if any: one weak component side of
// g - roots, canonicalized to contain the smallest incident vertex.
std::optional<std::vector<Vertex>> cut_side_for_roots(const Digraph& g,
                                                      const std::vector<Edge>& roots);

// Width of rooted carvings: min over carvings having a tree edge whose cut is
// exactly rho(X) of min(width(T,l), |rho(X)|).
int rooted_carving_width(const Digraph& g, const std::vector<Edge>& roots);

// Exact treewidth of the underlying undirected simple graph.
WidthResult treewidth_exact(const Digraph& g, int max_n = 18);
WidthResult treewidth_exact_undirected(const UndirectedGraph& g, int max_n = 18);

}  // namespace euler

#endif
