#ifndef EULER_GRID_DRAWING_HPP
#define EULER_GRID_DRAWING_HPP

#include <string>
#include <utility>
#include <vector>

#include "euler/core.hpp"
#include "euler/embedding.hpp"

namespace euler {

// Orthogonal grid drawing of a planar graph of maximum degree 3, produced
// from an st-numbering and a visibility-style layout of the given rotation
// system. Vertices land on grid points; every edge becomes a unit-step grid
// path from the position of its tail to the position of its head; paths are
// internally disjoint and meet only at shared endpoints (a topological-minor
// model in the grid).
struct GridPoint {
    int x = 0, y = 0;
    friend bool operator==(GridPoint a, GridPoint b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(GridPoint a, GridPoint b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

struct GridLayout {
    VertexMap<GridPoint> position;
    EdgeMap<std::vector<GridPoint>> edge_path;  // unit steps, tail to head
    int width = 0, height = 0;                  // coordinates lie in [1..width] x [1..height]
    void mirror_x();
};

// Requirements: h connected, loop-free, max degree 3, at least one edge,
// rot a genus-0 rotation system of h.
GridLayout orthogonal_layout(const Digraph& h, const RotationEmbedding& rot);

// model validity: paths are grid paths between the right endpoints and are
// pairwise vertex-disjoint apart from shared endpoints
bool valid_grid_model(const Digraph& h, const GridLayout& gl, std::string* why = nullptr);

}  // namespace euler

#endif
