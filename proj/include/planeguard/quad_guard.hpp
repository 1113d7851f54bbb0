#pragma once

#include "planeguard/plane_graph.hpp"

namespace planeguard {

// Direction per dual edge as an ordered face pair, induced by an Eulerian
// circuit: every dual vertex of a quadrangulation dual ends up with
// out-degree 2 and in-degree 2.
struct Orientation {
    std::vector<std::pair<FaceId, FaceId>> dir;  // indexed by primal EdgeId
};

struct TwoFactor {
    std::vector<EdgeId> edges;   // dual edges of H, ascending
    std::vector<char> member;    // indexed by primal EdgeId
};

struct GuardColoring {
    std::vector<int> color;  // 0/1 per vertex, not a proper coloring
};

struct ColoringCheckReport {
    bool valid = false;
    std::vector<FaceId> missing_color;  // faces without both colors
    std::vector<FaceId> no_mono_edge;   // faces without a monochromatic edge
};

Orientation euler_orient(const DualGraph& d);

// Perfect matching of the 2-regular out/in bipartite double, pulled back to
// dual edges: alternate edges along each cycle starting at its lowest edge.
TwoFactor two_factor(const DualGraph& d, const Orientation& o);

// BFS from vertex 0 with color 0, flipping exactly across edges whose dual
// lies in H. Throws std::runtime_error if a non-tree edge disagrees (H was
// not a 2-factor); never recolors.
GuardColoring parity_coloring(const PlaneGraph& g, const TwoFactor& h);

ColoringCheckReport validate_guard_coloring(const PlaneGraph& g, const GuardColoring& c);

// Three candidates: color class A patched over its maximal monochromatic
// matching, same for B, and the union of the two matchings. Their sizes sum
// to n, so the smallest is within floor(n/3).
EdgeGuardSet coloring_to_guards(const PlaneGraph& g, const GuardColoring& c);

struct QuadPipelineResult {
    Orientation orientation;
    TwoFactor h;
    GuardColoring coloring;
    EdgeGuardSet guards;
    long ops = 0;  // elementary structure visits, linear in the edge count
};

QuadPipelineResult guard_quadrangulation_full(const PlaneGraph& g);
EdgeGuardSet guard_quadrangulation(const PlaneGraph& g);

}  // namespace planeguard
