#ifndef EULER_GENERATORS_HPP
#define EULER_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "euler/core.hpp"

namespace euler {

// Orientation choice for the cells of a medial grid.
struct GridOrientation {
    enum class Kind { all_same, checkerboard, explicit_bitmap };
    Kind kind = Kind::all_same;
    // bitmap[x][y] = true -> cell (x,y) is anti-clockwise; sizes must be k x n
    std::vector<std::vector<bool>> bitmap;

    static GridOrientation all_same() { return {Kind::all_same, {}}; }
    static GridOrientation checkerboard() { return {Kind::checkerboard, {}}; }
    static GridOrientation explicit_map(std::vector<std::vector<bool>> bm) {
        return {Kind::explicit_bitmap, std::move(bm)};
    }
    // true = anti-clockwise; 1-based cell coordinates
    bool anticlockwise(int x, int y) const;
};

// Handles into the structure of a generated medial grid.
struct EulerGrid {
    Digraph graph;
    int k = 0, n = 0;                       // k columns, n rows of cells
    std::vector<std::vector<Vertex>> left, top, right, bottom;  // [x][y], 1-based via at()
    std::vector<std::vector<bool>> acw;     // cell orientations
    Vertex l(int x, int y) const { return left[x - 1][y - 1]; }
    Vertex t(int x, int y) const { return top[x - 1][y - 1]; }
    Vertex r(int x, int y) const { return right[x - 1][y - 1]; }
    Vertex b(int x, int y) const { return bottom[x - 1][y - 1]; }
    bool cell_acw(int x, int y) const { return acw[x - 1][y - 1]; }
    std::vector<std::vector<std::vector<Edge>>> cell_e;  // [x-1][y-1] -> 4 edges
    // the 4 edges of cell (x,y) in traversal order starting at l
    const std::vector<Edge>& cell_edges(int x, int y) const { return cell_e[x - 1][y - 1]; }
};

// k x n Euler grid: cells are directed 4-circles, grid-adjacent cells share a
// vertex. all_same orientation yields the swirl S_{k,n}.
EulerGrid euler_grid(int k, int n, const GridOrientation& o);
inline EulerGrid swirl(int k, int n) { return euler_grid(k, n, GridOrientation::all_same()); }

struct Router {
    Digraph graph;
    int k = 0;
    std::vector<EdgePath> circles;                 // C_1..C_k
    std::vector<std::vector<Vertex>> meet;         // meet[i][j] = v_{i,j}, 1-based, i != j
    Vertex meeting(int i, int j) const { return meet[i - 1][j - 1]; }
};

// Canonical k-router: circle C_i visits v_{i,1},..,v_{i,i-1},v_{i,i+1},..,v_{i,k}
// in index order. k = 2 is the degenerate two-loops-on-one-vertex case.
Router router(int k);

// The k-th member of the strong-immersion antichain family; with
// eulerianize the graph is balanced against a fresh bead vertex and parallel
// bead edges beyond the first are subdivided once.
Digraph antichain_member(int k, bool eulerianize);

// Named handles into antichain_member's fixed vertex ids.
struct AntichainIds {
    static Vertex l1() { return Vertex{0}; }
    static Vertex l2() { return Vertex{1}; }
    static Vertex r1() { return Vertex{2}; }
    static Vertex r2() { return Vertex{3}; }
    static Vertex v(int i) { return Vertex{4 + i}; }  // v_0..v_{2k}
    static Vertex bead(int k) { return Vertex{4 + 2 * k + 1}; }
};

struct Fence3 {
    Digraph graph;
    std::vector<Vertex> s, t;  // ports s1..s3, t1..t3
};

// The 3x3 fence gadget used to reduce degree-6 vertices to degree 4.
Fence3 fence3();

UndirectedGraph undirected_grid(int n, int m);

// Eulerian sampler: union of `cycles` random closed walks on <= n vertices.
// Deterministic per seed; rejection-resamples until max_degree is honored.
Digraph random_eulerian(int n, int cycles, std::uint64_t seed,
                        std::optional<int> max_degree = std::nullopt);

// All Eulerian digraphs (up to isomorphism) with at most max_n vertices,
// at most max_m edges, max degree <= max_deg, and at most max_mult parallel
// copies of any arc (loops counted per vertex likewise). Isolated vertices
// are not generated.
std::vector<Digraph> enumerate_eulerian(int max_n, int max_m, int max_deg, int max_mult);

}  // namespace euler

#endif
