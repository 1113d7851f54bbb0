#include "planeguard/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace planeguard {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

PlaneGraph PlaneGraph::build(int n, const std::vector<std::vector<VertexId>>& rotations,
                             std::pair<VertexId, VertexId> outer) {
    if (n < 1) fail("vertex count must be positive");
    if ((int)rotations.size() != n) fail("rotation list count does not match vertex count");

    // Validate neighbor lists: in range, loop-free, no repeats.
    for (VertexId v = 0; v < n; ++v) {
        std::set<VertexId> seen;
        for (VertexId w : rotations[v]) {
            if (w < 0 || w >= n) fail("neighbor id out of range at vertex " + std::to_string(v));
            if (w == v) fail("loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                fail("parallel edge " + std::to_string(v) + "-" + std::to_string(w));
        }
    }

    PlaneGraph g;
    g.n_ = n;
    g.rotations_ = rotations;

    // One dart per directed pair, laid out per tail vertex in rotation order.
    g.dart_base_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) g.dart_base_[v + 1] = g.dart_base_[v] + (int)rotations[v].size();
    int dart_count = g.dart_base_[n];
    if (dart_count == 0) fail("graph has no edges");
    g.darts_.resize(dart_count);

    std::map<std::pair<VertexId, VertexId>, DartId> by_pair;
    for (VertexId v = 0; v < n; ++v) {
        int deg = (int)rotations[v].size();
        for (int i = 0; i < deg; ++i) {
            DartId d = g.dart_base_[v] + i;
            Dart& dt = g.darts_[d];
            dt.tail = v;
            dt.head = rotations[v][i];
            dt.next = g.dart_base_[v] + (i + 1) % deg;
            dt.prev = g.dart_base_[v] + (i + deg - 1) % deg;
            by_pair[{v, dt.head}] = d;
        }
    }

    // Twins: v lists w iff w lists v.
    for (DartId d = 0; d < dart_count; ++d) {
        auto it = by_pair.find({g.darts_[d].head, g.darts_[d].tail});
        if (it == by_pair.end())
            fail("vertex " + std::to_string(g.darts_[d].tail) + " lists " +
                 std::to_string(g.darts_[d].head) + " but not vice versa");
        g.darts_[d].twin = it->second;
    }

    // Edge ids: rank of the sorted endpoint pair. std::map iteration gives
    // the lexicographic order directly.
    {
        std::map<VertexPair, EdgeId> rank;
        for (DartId d = 0; d < dart_count; ++d)
            rank.emplace(VertexPair(g.darts_[d].tail, g.darts_[d].head), 0);
        EdgeId next_id = 0;
        for (auto& [pair, id] : rank) {
            id = next_id++;
            g.edge_pairs_.push_back(pair);
        }
        g.edge_dart_.assign(next_id, -1);
        for (DartId d = 0; d < dart_count; ++d) {
            EdgeId e = rank[VertexPair(g.darts_[d].tail, g.darts_[d].head)];
            g.darts_[d].edge = e;
            if (g.edge_dart_[e] < 0) g.edge_dart_[e] = d;
        }
    }

    // Connectivity.
    {
        std::vector<char> seen(n, 0);
        std::queue<VertexId> bfs;
        bfs.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!bfs.empty()) {
            VertexId v = bfs.front();
            bfs.pop();
            for (VertexId w : rotations[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    bfs.push(w);
                }
        }
        if (reached != n) fail("graph is disconnected");
    }

    // Face tracing: orbits of d -> prev(twin(d)), ids ordered by the lowest
    // dart id they contain (scan order gives exactly that).
    {
        std::vector<FaceId> face_of(dart_count, -1);
        for (DartId d0 = 0; d0 < dart_count; ++d0) {
            if (face_of[d0] >= 0) continue;
            Face f;
            f.id = (FaceId)g.faces_.size();
            DartId d = d0;
            do {
                face_of[d] = f.id;
                f.boundary.push_back(d);
                d = g.darts_[g.darts_[d].twin].prev;
            } while (d != d0);
            g.faces_.push_back(std::move(f));
        }
        for (DartId d = 0; d < dart_count; ++d) g.darts_[d].face = face_of[d];
    }

    // Euler relation is the planarity certificate for a connected rotation
    // system embedded in the sphere.
    int m = dart_count / 2;
    if (n - m + (int)g.faces_.size() != 2)
        fail("rotation system is not planar (Euler check failed)");

    auto it = by_pair.find(outer);
    if (it == by_pair.end())
        fail("outer pair " + std::to_string(outer.first) + " " + std::to_string(outer.second) +
             " is not an edge");
    g.outer_face_ = g.darts_[it->second].face;
    g.outer_pair_ = outer;
    return g;
}

DartId PlaneGraph::dart_between(VertexId u, VertexId v) const {
    if (u < 0 || u >= n_) return -1;
    const auto& rot = rotations_[u];
    for (int i = 0; i < (int)rot.size(); ++i)
        if (rot[i] == v) return dart_base_[u] + i;
    return -1;
}

EdgeId PlaneGraph::edge_between(VertexId u, VertexId v) const {
    DartId d = dart_between(u, v);
    return d < 0 ? -1 : darts_[d].edge;
}

std::pair<FaceId, FaceId> PlaneGraph::edge_faces(EdgeId e) const {
    DartId d = edge_dart_[e];
    return {darts_[d].face, darts_[darts_[d].twin].face};
}

DualGraph PlaneGraph::dual() const {
    DualGraph d;
    d.face_count = face_count();
    d.edges.resize(edge_count());
    d.incidence.resize(d.face_count);
    d.degree.assign(d.face_count, 0);
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto [f1, f2] = edge_faces(e);
        d.edges[e] = DualEdge{f1, f2, e};
    }
    // Incidence in boundary order: walking a face boundary crosses each
    // boundary edge once, which is the rotation of the dual vertex.
    for (const Face& f : faces_)
        for (DartId bd : f.boundary) {
            d.incidence[f.id].push_back(darts_[bd].edge);
            ++d.degree[f.id];
        }
    return d;
}

GuardCheckReport PlaneGraph::verify_guard_set(const EdgeGuardSet& s) const {
    for (const auto& e : s.edges)
        if (!has_edge(e.a, e.b))
            fail("guard " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                 " is not an edge of the graph");
    std::vector<char> guarded(n_, 0);
    for (const auto& e : s.edges) guarded[e.a] = guarded[e.b] = 1;
    GuardCheckReport rep;
    for (const Face& f : faces_) {
        bool ok = false;
        for (DartId d : f.boundary)
            if (guarded[darts_[d].tail]) {
                ok = true;
                break;
            }
        if (!ok) rep.unguarded.push_back(f.id);
    }
    rep.valid = rep.unguarded.empty();
    return rep;
}

bool PlaneGraph::is_quadrangulation() const {
    for (const Face& f : faces_) {
        if (f.degree() != 4) return false;
        // Boundary must visit 4 distinct vertices (rules out degenerate
        // walks like a doubled path).
        VertexId a = darts_[f.boundary[0]].tail, b = darts_[f.boundary[1]].tail;
        VertexId c = darts_[f.boundary[2]].tail, e = darts_[f.boundary[3]].tail;
        if (a == c || b == e || a == b || b == c || c == e || e == a) return false;
    }
    return true;
}

bool PlaneGraph::is_triangulation() const {
    for (const Face& f : faces_)
        if (f.degree() != 3) return false;
    return true;
}

}  // namespace planeguard
