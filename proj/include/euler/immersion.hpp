#ifndef EULER_IMMERSION_HPP
#define EULER_IMMERSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "euler/core.hpp"

namespace euler {

// Witness that `guest` immerses in `host`: injective vertex map + edge-disjoint
// path images. Strong additionally forbids images of guest vertices as
// internal vertices of any path image.
struct ImmersionModel {
    Digraph guest;
    Digraph host;
    VertexMap<Vertex> vmap;    // guest vertex -> host vertex
    EdgeMap<EdgePath> emap;    // guest edge -> path in host
    bool strong = false;
    bool rooted = false;
    std::vector<Edge> guest_roots;
    std::vector<Edge> host_roots;

    static ImmersionModel identity(const Digraph& g, bool strong = true);
};

struct ModelCheck {
    bool ok = true;
    std::string violated;  // first violated clause, empty when ok
};

// Checks every model invariant; on failure names the violated clause
// (injectivity / path validity / edge-disjointness / endpoints / zero-length /
// strongness / roots).
ModelCheck validate_model(const ImmersionModel& m);

struct SearchResult {
    verdict answer = verdict::no;
    std::optional<ImmersionModel> model;  // present iff answer == yes
    std::int64_t nodes_used = 0;
};

struct SearchOptions {
    bool strong = true;
    std::int64_t budget_nodes = 100'000'000;
    // rooted search: orderings must have equal length
    std::optional<std::pair<std::vector<Edge>, std::vector<Edge>>> roots;  // (guest, host)
};

// Complete backtracking decision procedure: guest vertices mapped by
// decreasing degree with degree-compatible candidates, edges routed
// shortest-first with full rollback. Exhaustive below the node budget.
SearchResult find_immersion(const Digraph& guest, const Digraph& host, const SearchOptions& opt);

// Splitting-off view of a model: an Eulerian subgraph of the host plus an
// ordered split list whose application yields a graph isomorphic to the guest.
struct SplitDecomposition {
    Digraph subgraph;
    std::vector<std::pair<Edge, Edge>> splits;
};

SplitDecomposition model_to_splits(const ImmersionModel& m);

// Rebuilds the (possibly non-strong) model of the split result inside g.
ImmersionModel splits_to_model(const Digraph& g, const Digraph& subgraph,
                               const std::vector<std::pair<Edge, Edge>>& splits);

// Composition H -> G -> K of two models; strong when both are.
ImmersionModel compose(const ImmersionModel& first, const ImmersionModel& second);

}  // namespace euler

#endif
