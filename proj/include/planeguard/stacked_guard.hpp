#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "planeguard/plane_graph.hpp"
#include "planeguard/stacking.hpp"

namespace planeguard {

// A pocket of a stacked triangulation: three corner vertices, every vertex
// strictly inside them, and the triangular faces they enclose. All small-case
// searches run over such constant-size snapshots.
struct Region {
    std::array<VertexId, 3> corners{-1, -1, -1};
    VertexId hub = -1;  // interior vertex adjacent to all three corners, -1 if none
    std::vector<VertexId> interior;
    std::set<VertexPair> edges;                  // induced edges, corner edges included
    std::vector<std::array<VertexId, 3>> faces;  // triangles strictly inside the corners
};

// The full graph viewed as one pocket: corners = outer triangle. Throws
// std::invalid_argument if g is not stacked.
Region whole_graph_region(const PlaneGraph& g);

// For a 6-vertex pocket (3 corners + 3 interior): the single edge guarding all
// 8 faces (7 inside + the corner triangle). With avoid >= 0, instead returns
// the lowest edge guarding every face not already seen by that vertex; when
// require_outer is set the edge must keep an endpoint on a corner != avoid.
// Throws std::logic_error if the guard is missing or not unique.
VertexPair unique_guard_6(const Region& six, VertexId avoid = -1, bool require_outer = true);

// For a 7-vertex pocket (3 corners + 4 interior) with some corners already
// guard endpoints: the lowest edge that, together with them, sees all 9 inner
// faces. Throws std::logic_error if none exists.
VertexPair extend_7(const Region& seven, const std::vector<VertexId>& guarded_corners);

// Two or three vertices wired into a host face so that any guard set of the
// result can be rewritten, at equal size, to one whose endpoints include the
// forcing target: the pair {host[0], host[1]} for the weak form, the single
// vertex host[0] for the strong form.
struct GadgetRecord {
    bool strong = false;
    std::array<VertexId, 3> host{-1, -1, -1};
    VertexId a = -1;
    VertexId b = -1;
    VertexId c = -1;  // strong form only
};

// Insert into the inner face with corner set {face[0], face[1], face[2]}.
// Weak: a joined to all three corners, b joined to a, face[0], face[1].
// Strong: additionally c joined to a, b, face[0]. Stackedness is preserved.
std::pair<PlaneGraph, GadgetRecord> insert_weak_gadget(const PlaneGraph& g,
                                                       std::array<VertexId, 3> face);
std::pair<PlaneGraph, GadgetRecord> insert_strong_gadget(const PlaneGraph& g,
                                                         std::array<VertexId, 3> face);

// Equal-size rewrites of a guard set valid on the gadget-augmented graph.
// normalize_weak ends with both forced vertices among the endpoints;
// normalize_strong ends with the forced vertex among the endpoints and at
// least one edge from a host corner into {a,b,c}.
EdgeGuardSet normalize_weak(const GadgetRecord& gad, const EdgeGuardSet& guards);
EdgeGuardSet normalize_strong(const GadgetRecord& gad, const EdgeGuardSet& guards);

// Rewrites guards of the gadget graph as guards of the gadget-free host:
// a guard with one gadget endpoint keeps its real endpoint u and becomes
// {u, lowest neighbor of u in host}. Guards fully inside the gadget must have
// been normalized away (throws std::logic_error otherwise).
EdgeGuardSet remap_gadget_guards(const GadgetRecord& gad, const EdgeGuardSet& guards,
                                 const PlaneGraph& host);

// One reduction step of the solver: which rule fired, how many vertices it
// removed, and how many guards it ended up adding (measured, so replaying the
// ledger reproduces the output size).
struct LedgerEntry {
    std::string case_id;
    int removed = 0;
    int added = 0;
};

struct StackedResult {
    EdgeGuardSet guards;
    std::vector<LedgerEntry> ledger;
    bool undersized = false;   // n == 3: the 2n/7 budget only makes sense from n = 4
    long long tree_ops = 0;    // tree visits + queue traffic, for the linearity check
    long long fallbacks = 0;   // bounded-search repairs taken instead of the case tables
};

// Guard set of size <= floor(2n/7) for a stacked triangulation with n >= 4
// (n = 3 returns one guard and sets undersized). Deterministic; throws
// std::invalid_argument if g is not stacked.
StackedResult guard_stacked(const PlaneGraph& g);

}  // namespace planeguard
