#ifndef EULER_EMBEDDING_HPP
#define EULER_EMBEDDING_HPP

#include <optional>
#include <string>
#include <vector>

#include "euler/core.hpp"

namespace euler {

// One of the two ends of an edge; loops contribute both ends at one vertex.
struct EdgeEnd {
    Edge e;
    bool at_head = false;
    friend bool operator==(EdgeEnd a, EdgeEnd b) { return a.e == b.e && a.at_head == b.at_head; }
    friend bool operator<(EdgeEnd a, EdgeEnd b) {
        return a.e < b.e || (a.e == b.e && a.at_head < b.at_head);
    }
};

// Combinatorial map: per-vertex cyclic sequence of edge ends.
struct RotationEmbedding {
    VertexMap<std::vector<EdgeEnd>> rotation;
};

bool valid_rotation(const Digraph& g, const RotationEmbedding& r, std::string* why = nullptr);

// A dart: edge traversed forward (tail->head) or backward.
struct Dart {
    Edge e;
    bool forward = true;
    friend bool operator==(Dart a, Dart b) { return a.e == b.e && a.forward == b.forward; }
    friend bool operator<(Dart a, Dart b) {
        return a.e < b.e || (a.e == b.e && a.forward < b.forward);
    }
};

struct FaceStructure {
    std::vector<std::vector<Dart>> faces;  // dart orbits
    int genus = 0;                         // summed over components
    std::vector<int> face_of_forward;     // edge id -> face index of forward dart
    std::vector<int> face_of_backward;
    int face_of(Dart d) const;
    // the two faces flanking an edge (may coincide)
    std::pair<int, int> flanks(Edge e) const;
};

// Standard next-dart face traversal; throws input_error on invalid rotations.
FaceStructure faces(const Digraph& g, const RotationEmbedding& r);

enum class VertexClass { eulerian_embedded, strongly_planar, not_applicable };

// Degree-4 Eulerian vertices: alternating in/out rotation = eulerian_embedded,
// paired = strongly_planar. Degree-2 vertices are always eulerian_embedded.
VertexClass vertex_embedding_class(const Digraph& g, const RotationEmbedding& r, Vertex v);

bool is_plane_euler_embedding(const Digraph& g, const RotationEmbedding& r);

struct EmbeddingSearchResult {
    verdict answer = verdict::no;
    std::optional<RotationEmbedding> embedding;
};

// Genus-0 rotation with every vertex eulerian-embedded, if one exists.
// Exhaustive over the <= 2 alternating rotations per degree-4 vertex, with
// one vertex pinned against reflection.
EmbeddingSearchResult find_plane_euler_embedding(const Digraph& g,
                                                 std::int64_t budget_nodes = 100'000'000);

// A combinatorial cut-cycle: cyclic sequence of distinct crossed edges,
// realizable as a simple closed curve through pairwise-distinct faces.
struct CutCycleDescriptor {
    std::vector<Edge> crossed;
};

struct CutCycleCheck {
    bool ok = false;
    std::vector<Vertex> side;  // X(F): one side of the induced cut
    std::string why;
};

CutCycleCheck validate_cut_cycle(const Digraph& g, const RotationEmbedding& r,
                                 const CutCycleDescriptor& d);

// in/out edges alternate around the crossed sequence relative to the side
bool cut_cycle_alternating(const Digraph& g, const CutCycleDescriptor& d,
                           const std::vector<Vertex>& side);

struct CutCycleEnumeration {
    verdict answer = verdict::inconclusive;
    std::vector<CutCycleDescriptor> cycles;  // canonicalized, validated
};

CutCycleEnumeration enumerate_cut_cycles(const Digraph& g, const RotationEmbedding& r,
                                         int max_order, std::int64_t budget_nodes = 20'000'000);

// Directed circles of length <= max_len (distinct visited vertices).
std::vector<EdgePath> enumerate_circles(const Digraph& g, int max_len,
                                        std::int64_t budget_nodes = 20'000'000);

// Subgraph drawn inside the disc bounded by a circle, relative to a chosen
// outer face: the circle plus everything cut off from that face.
Digraph subgraph_inside_circle(const Digraph& g, const RotationEmbedding& r,
                               const FaceStructure& fs, const EdgePath& circle, int outer_face);

// Directed linegraphs: vertices are edges, arcs are 2-paths; the plus variant
// subdivides every edge first.
Digraph linegraph(const Digraph& g);
Digraph subdivide_all(const Digraph& g);
Digraph linegraph_plus(const Digraph& g);

struct EulerGrid;  // generators.hpp

// The canonical plane drawing of a medial grid.
RotationEmbedding euler_grid_rotation(const EulerGrid& eg);

}  // namespace euler

#endif
