#ifndef EULER_CONNECTIVITY_HPP
#define EULER_CONNECTIVITY_HPP

#include <optional>
#include <vector>

#include "euler/core.hpp"

namespace euler {

// A set of pairwise edge-disjoint paths.
struct Linkage {
    std::vector<EdgePath> paths;
    int order() const { return (int)paths.size(); }
    std::vector<PathType> type(const Digraph& g) const;
    bool edge_disjoint(const Digraph& g) const;
    bool all_linear(const Digraph& g) const;
};

struct BidirectionalPacking {
    int k = 0;
    Linkage forward;   // k paths x1 -> x2
    Linkage backward;  // k paths x2 -> x1
};

// Eulerian Menger: maximum k such that there are k edge-disjoint paths from
// x1 to x2 and k from x2 to x1, all pairwise edge-disjoint; 2k equals the
// minimum induced-cut order separating x1 from x2.
BidirectionalPacking max_bidirectional_packing(const Digraph& g, const std::vector<Vertex>& x1,
                                               const std::vector<Vertex>& x2);

// Minimum-order induced cut with x1 inside and x2 outside; among minimum cuts
// the side X is the unique smallest one. Works on any digraph (undirected
// sense); nullopt when x1 or x2 is empty.
std::optional<VertexCut> min_separating_cut(const Digraph& g, const std::vector<Vertex>& x1,
                                            const std::vector<Vertex>& x2);

// Maximum number of directed edge-disjoint x1 -> x2 paths, with witnesses.
Linkage max_directed_paths(const Digraph& g, const std::vector<Vertex>& x1,
                           const std::vector<Vertex>& x2);

// Same order and type, all paths linear (cycles inside paths shortcut away).
Linkage linearize(const Digraph& g, const Linkage& l);
EdgePath linearize_path(const Digraph& g, const EdgePath& p);

}  // namespace euler

#endif
