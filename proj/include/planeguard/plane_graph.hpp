#pragma once

#include <set>
#include <utility>
#include <vector>

namespace planeguard {

using VertexId = int;
using DartId = int;
using EdgeId = int;
using FaceId = int;

// Unordered vertex pair, stored normalized (a <= b would allow loops; we
// require a < b since the graphs are loop-free).
struct VertexPair {
    VertexId a = -1;
    VertexId b = -1;
    VertexPair() = default;
    VertexPair(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
    bool contains(VertexId v) const { return a == v || b == v; }
    VertexId other(VertexId v) const { return a == v ? b : a; }
};

// Directed half-edge. `next` is the next dart clockwise around `tail`.
struct Dart {
    VertexId tail = -1;
    VertexId head = -1;
    DartId twin = -1;
    DartId next = -1;
    DartId prev = -1;
    EdgeId edge = -1;
    FaceId face = -1;
};

struct Face {
    FaceId id = -1;
    std::vector<DartId> boundary;  // cyclic, starts at the lowest dart id
    int degree() const { return (int)boundary.size(); }
};

struct EdgeGuardSet {
    std::set<VertexPair> edges;
    int size() const { return (int)edges.size(); }
    bool insert(VertexId u, VertexId v) { return edges.insert(VertexPair(u, v)).second; }
    bool contains_vertex(VertexId v) const {
        for (const auto& e : edges)
            if (e.contains(v)) return true;
        return false;
    }
};

struct GuardCheckReport {
    bool valid = false;
    std::vector<FaceId> unguarded;
};

// One dual edge per primal edge; `from`/`to` are the faces on either side.
struct DualEdge {
    FaceId from = -1;
    FaceId to = -1;
    EdgeId primal = -1;
};

struct DualGraph {
    int face_count = 0;
    std::vector<DualEdge> edges;                 // indexed by primal EdgeId
    std::vector<std::vector<EdgeId>> incidence;  // per face, in boundary order
    std::vector<int> degree;
};

// Immutable combinatorial embedding of a simple connected plane graph.
// The face reached by following prev(twin(d)) repeatedly from dart d is the
// face to the left of d when walking tail->head; faces are the orbits of
// that map. The outer face is the orbit containing the designated dart.
class PlaneGraph {
public:
    // rotations[v] lists v's neighbors in clockwise order. `outer` is an
    // ordered pair (u,v); the face traced from the dart u->v becomes outer.
    // Throws std::invalid_argument on any structural defect.
    static PlaneGraph build(int n, const std::vector<std::vector<VertexId>>& rotations,
                            std::pair<VertexId, VertexId> outer);

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edge_pairs_.size(); }
    int face_count() const { return (int)faces_.size(); }
    int dart_count() const { return (int)darts_.size(); }

    const Dart& dart(DartId d) const { return darts_[d]; }
    const std::vector<Dart>& darts() const { return darts_; }
    const Face& face(FaceId f) const { return faces_[f]; }
    const std::vector<Face>& faces() const { return faces_; }
    FaceId outer_face() const { return outer_face_; }
    std::pair<VertexId, VertexId> outer_pair() const { return outer_pair_; }

    int degree(VertexId v) const { return (int)rotations_[v].size(); }
    const std::vector<VertexId>& rotation(VertexId v) const { return rotations_[v]; }

    // Darts with tail v occupy the contiguous id range [first, last).
    std::pair<DartId, DartId> dart_range(VertexId v) const {
        return {dart_base_[v], dart_base_[v + 1]};
    }

    // Lookup of the dart u->v, or -1 when uv is not an edge.
    DartId dart_between(VertexId u, VertexId v) const;
    EdgeId edge_between(VertexId u, VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const { return edge_between(u, v) >= 0; }
    VertexPair edge_endpoints(EdgeId e) const { return edge_pairs_[e]; }
    const std::vector<VertexPair>& edge_pairs() const { return edge_pairs_; }

    // Faces on either side of edge e (equal only for bridges, which cannot
    // occur here: 2-connectivity is not required but faces of a bridge edge
    // coincide and that is still well-defined).
    std::pair<FaceId, FaceId> edge_faces(EdgeId e) const;

    DualGraph dual() const;

    GuardCheckReport verify_guard_set(const EdgeGuardSet& s) const;

    bool is_quadrangulation() const;
    bool is_triangulation() const;

private:
    PlaneGraph() = default;

    int n_ = 0;
    std::vector<std::vector<VertexId>> rotations_;
    std::vector<Dart> darts_;
    std::vector<Face> faces_;
    std::vector<VertexPair> edge_pairs_;        // EdgeId -> endpoints, sorted
    std::vector<DartId> edge_dart_;             // EdgeId -> one of its darts
    std::vector<int> dart_base_;                // v -> first dart id of v's block
    FaceId outer_face_ = -1;
    std::pair<VertexId, VertexId> outer_pair_{-1, -1};
};

}  // namespace planeguard
