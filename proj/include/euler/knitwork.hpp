#ifndef EULER_KNITWORK_HPP
#define EULER_KNITWORK_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "euler/core.hpp"
#include "euler/immersion.hpp"

namespace euler {

// A matching between two edge sets, kept sorted for set semantics.
struct LinkMatching {
    std::vector<std::pair<Edge, Edge>> pairs;
    void normalize();
    bool matching_over(const std::vector<Edge>& e1, const std::vector<Edge>& e2) const;
    friend bool operator<(const LinkMatching& a, const LinkMatching& b) { return a.pairs < b.pairs; }
    friend bool operator==(const LinkMatching& a, const LinkMatching& b) { return a.pairs == b.pairs; }
};

// A set of matchings over fixed sides (E1, E2).
struct Link {
    std::vector<Edge> e1, e2;
    std::set<LinkMatching> matchings;
    friend bool operator==(const Link& a, const Link& b);
};

struct LinkPredicates {
    bool reliable = false;
    bool linkable = false;
    verdict well_linked = verdict::inconclusive;
};

// Exact predicate evaluation; well_linked is exhaustive only while the sides
// have at most `side_budget` elements.
LinkPredicates link_predicates(const Link& l, int side_budget = 8);

// the maximal link: every matching of (E1, E2)
Link all_matchings_link(std::vector<Edge> e1, std::vector<Edge> e2, int side_budget = 8);

// Rooted Eulerian digraph (G, pi(X)): roots are an ordering of rho(side).
struct RootedDigraph {
    Digraph graph;
    std::vector<Edge> roots;
    std::vector<Vertex> side;  // X
};

// validates rho(side) == set(roots); throws input_error otherwise
void check_rooted(const RootedDigraph& rd);

enum class StitchDir { down, up };

// Contract one side of a rooted cut Y to a fresh vertex. Down keeps Y and the
// original roots; up keeps the complement and reroots at pi_y. Edge ids are
// preserved across the stitch.
struct StitchResult {
    RootedDigraph rooted;
    Vertex stitch_vertex;
};
StitchResult stitch(const RootedDigraph& g, const std::vector<Vertex>& y,
                    const std::vector<Edge>& pi_y, StitchDir dir);

// Knit g2's complement side into the rooted cut Y of g1 along matched
// orderings. Inverse of stitching; edge ids shared by both parts merge.
RootedDigraph knit(const RootedDigraph& g2, const RootedDigraph& g1,
                   const std::vector<Vertex>& y, const std::vector<Edge>& pi_y);

// Feasible rho(X)-types: the reliable link of all linkage types realizable
// from rho^-(X) to rho^+(X) with internal vertices inside X.
struct FeasibleTypes {
    verdict answer = verdict::inconclusive;
    Link link;
};
FeasibleTypes feasible_types(const Digraph& g, const std::vector<Vertex>& x,
                             std::int64_t budget_nodes = 5'000'000);

// Label quasi-order: user-supplied reflexive transitive comparison.
using LabelOrder = std::function<bool(const std::string&, const std::string&)>;
inline bool label_equal(const std::string& a, const std::string& b) { return a == b; }

// Omega-knitwork: rooted digraph + interface orderings mu + reliable routing
// links mm + labels phi over an opaque quasi-order.
struct Knitwork {
    RootedDigraph rooted;
    VertexMap<std::vector<Edge>> mu;
    VertexMap<Link> mm;
    VertexMap<std::string> phi;
};

// structural invariants: mu(v) permutes rho(v); dom(mm) within dom(mu);
// every mm(v) is a reliable link over (rho^-(v), rho^+(v))
void check_knitwork(const Knitwork& k);

bool knitworks_equal(const Knitwork& a, const Knitwork& b);

struct KnitworkStitchResult {
    verdict answer = verdict::inconclusive;  // down-stitch may exhaust feasible_types
    Knitwork knitwork;
    Vertex stitch_vertex;
};
KnitworkStitchResult stitch_knitwork(const Knitwork& k, const std::vector<Vertex>& y,
                                     const std::vector<Edge>& pi_y, StitchDir dir,
                                     std::int64_t budget_nodes = 5'000'000);

Knitwork knit_knitwork(const Knitwork& k2, const Knitwork& k1, const std::vector<Vertex>& y,
                       const std::vector<Edge>& pi_y);

// matching induced at v by consecutive edge pairs of a linkage / of an
// immersion's image paths
LinkMatching matching_of_linkage(const Digraph& g, const std::vector<EdgePath>& paths, Vertex v);
LinkMatching matching_of_immersion(const ImmersionModel& m, Vertex host_vertex);

struct KnitworkImmersionCheck {
    bool ok = true;
    int condition = 0;       // 1..6 when violated
    std::string detail;
};

// The six-condition knitwork immersion validator. `gamma` maps `from`'s
// underlying graph into `to`'s; its rooted flags are ignored and re-derived
// from the knitworks.
KnitworkImmersionCheck validate_knitwork_immersion(const ImmersionModel& gamma,
                                                   const Knitwork& from, const Knitwork& to,
                                                   bool strong,
                                                   const LabelOrder& order = label_equal);

// Knit two stitched-side immersions into one, per the composition theorem:
// gamma_d maps stitch(from, pi_b, down) into stitch(to, pi_y, down) with
// gamma_d(b*) = y*, gamma_u the up-stitches likewise.
ImmersionModel knit_immersions(const ImmersionModel& gamma_d, const ImmersionModel& gamma_u,
                               const Knitwork& from, const std::vector<Vertex>& b,
                               const std::vector<Edge>& pi_b, const Knitwork& to,
                               const std::vector<Vertex>& y, const std::vector<Edge>& pi_y);

}  // namespace euler

#endif
