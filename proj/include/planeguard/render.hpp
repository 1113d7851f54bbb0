#pragma once

#include <string>

#include "planeguard/plane_graph.hpp"

namespace planeguard {

// Graphviz dump (undirected, neato-friendly). Guard edges, when given, come
// out red and thick.
std::string render_dot(const PlaneGraph& g, const EdgeGuardSet* guards = nullptr);

// Straight-line drawing: the outer cycle is pinned to a circle and every
// interior vertex sits at the average of its neighbors (one sparse solve).
// For 3-connected inputs this is a planar embedding.
std::string render_svg(const PlaneGraph& g, const EdgeGuardSet* guards = nullptr);

}  // namespace planeguard
