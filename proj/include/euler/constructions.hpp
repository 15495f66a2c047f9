#ifndef EULER_CONSTRUCTIONS_HPP
#define EULER_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "euler/core.hpp"
#include "euler/embedding.hpp"
#include "euler/generators.hpp"
#include "euler/immersion.hpp"

namespace euler {

// Strong immersion of the k x k swirl into the 2k^2 x 2k^2 Euler grid with
// the given orientation. Uniformly oriented k x k squares are used directly;
// otherwise each odd-indexed square donates an anti-clockwise cell and the
// cells are joined by corridor paths.
ImmersionModel swirl_into_eulergrid(int k, const GridOrientation& o);

// Strong immersion of an Eulerian digraph of max degree 4 on n vertices into
// the 6n-router, via the per-vertex six-circle gadget.
struct RouterImmersion {
    ImmersionModel model;
    Router host;
};
RouterImmersion into_router(const Digraph& g);

// Degree reduction: replaces every degree-6 vertex by a fence gadget,
// in-neighbours to the s-ports, out-neighbours to the t-ports.
struct FenceReplacement {
    Vertex original;
    std::vector<Vertex> s, t;           // gadget ports
    std::vector<Vertex> gadget_vertices;
};
struct DegreeReduction {
    Digraph graph;
    std::vector<FenceReplacement> gadgets;
};
DegreeReduction reduce_degree6(const Digraph& g);

// Strong immersion of a plane Eulerian-embedded digraph into a swirl:
// vertex split along the rotation, grid layout of the cubic split graph,
// lift through the swirl cells. Grid side m is recorded; m <= 12 n for
// loop-free inputs (n = |V|).
struct PlanarIntoSwirl {
    ImmersionModel model;
    int grid_side = 0;  // m: host is the m x m swirl
};
PlanarIntoSwirl planar_into_swirl(const Digraph& g, const RotationEmbedding& emb);

}  // namespace euler

#endif
