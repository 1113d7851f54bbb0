#pragma once

#include "planeguard/plane_graph.hpp"

namespace planeguard {

// Reconstructs a PlaneGraph from its face cycles. Each face is listed as the
// cyclic vertex sequence matching the tracing convention, so the rotation
// successor of dart u->w is u->q where q precedes u in the face through u->w.
// Every directed pair must appear in exactly one face. Rotations are emitted
// starting at the lowest neighbor id, which keeps serialization canonical.
PlaneGraph build_from_faces(int n, const std::vector<std::vector<VertexId>>& faces,
                            std::pair<VertexId, VertexId> outer);

// Mutable face-cycle list for incremental constructions. Indices are stable:
// operations replace the face in place and append the new ones.
class FaceListBuilder {
public:
    explicit FaceListBuilder(std::vector<std::vector<VertexId>> faces)
        : faces_(std::move(faces)) {}

    int face_count() const { return (int)faces_.size(); }
    const std::vector<VertexId>& face(int i) const { return faces_[i]; }
    const std::vector<std::vector<VertexId>>& faces() const { return faces_; }

    // Stacks v into triangular face i = (x,y,z): slot i becomes (x,y,v),
    // then (y,z,v) and (z,x,v) are appended.
    void stack(int i, VertexId v);

    // Splits quadrilateral face i = (a,b,c,d) by a degree-2 vertex w joined
    // to an opposite pair: bit 0 -> {a,c}, bit 1 -> {b,d}. Slot i becomes the
    // quarter containing edge ab resp. bc; the other quarter is appended.
    void split_quad(int i, VertexId w, int pair_bit);

private:
    std::vector<std::vector<VertexId>> faces_;
};

}  // namespace planeguard
