#ifndef EULER_CANONICAL_HPP
#define EULER_CANONICAL_HPP

#include <string>
#include <vector>

#include "euler/core.hpp"

namespace euler {

// Canonical code of a directed multigraph: equal codes iff isomorphic.
// Individualization-refinement over vertex orderings; fine for desk-scale
// graphs (roughly <= 30 vertices unless highly symmetric).
std::string canonical_form(const Digraph& g);

// Rooted variant: isomorphisms must map the i-th root to the i-th root.
std::string canonical_form(const Digraph& g, const std::vector<Edge>& roots);

bool isomorphic(const Digraph& a, const Digraph& b);
bool isomorphic_rooted(const Digraph& a, const std::vector<Edge>& ra, const Digraph& b,
                       const std::vector<Edge>& rb);

}  // namespace euler

#endif
