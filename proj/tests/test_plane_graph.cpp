#include <stdexcept>
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "planeguard/face_builder.hpp"
#include "planeguard/graph_io.hpp"
#include "planeguard/plane_graph.hpp"

using namespace planeguard;

namespace {

// K4 drawn with 0,1,2 as the outer triangle and 3 in the middle.
PlaneGraph k4() {
    return PlaneGraph::build(4, {{2, 3, 1}, {2, 0, 3}, {1, 3, 0}, {0, 2, 1}}, {0, 1});
}

PlaneGraph c4() { return PlaneGraph::build(4, {{1, 3}, {2, 0}, {3, 1}, {0, 2}}, {0, 1}); }

std::vector<VertexId> face_verts(const PlaneGraph& g, FaceId f) {
    std::vector<VertexId> vs;
    for (DartId d : g.face(f).boundary) vs.push_back(g.dart(d).tail);
    std::sort(vs.begin(), vs.end());
    return vs;
}

}  // namespace

TEST_CASE("k4 counts and dart invariants") {
    PlaneGraph g = k4();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 4);
    CHECK(g.dart_count() == 12);
    for (DartId d = 0; d < g.dart_count(); ++d) {
        const Dart& dt = g.dart(d);
        CHECK(g.dart(dt.twin).twin == d);
        CHECK(g.dart(dt.next).prev == d);
        CHECK(g.dart(dt.twin).tail == dt.head);
        CHECK(g.dart(dt.twin).head == dt.tail);
        CHECK(g.dart(d).face == g.dart(g.dart(g.dart(d).twin).prev).face);
    }
    for (VertexId v = 0; v < 4; ++v) {
        auto [lo, hi] = g.dart_range(v);
        CHECK(hi - lo == g.degree(v));
        for (DartId d = lo; d < hi; ++d) CHECK(g.dart(d).tail == v);
    }
    CHECK(g.degree(3) == 3);
    CHECK(g.dart_between(0, 2) == 0);  // first entry of vertex 0's rotation
    CHECK(g.dart_between(0, 0) == -1);
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(4, 0));
}

TEST_CASE("k4 edge ids are sorted pairs") {
    PlaneGraph g = k4();
    std::vector<VertexPair> expect{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(g.edge_pairs() == expect);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge_endpoints(e);
        CHECK(g.edge_between(a, b) == e);
        auto [f1, f2] = g.edge_faces(e);
        CHECK(f1 != f2);
    }
}

TEST_CASE("k4 faces") {
    PlaneGraph g = k4();
    CHECK(g.is_triangulation());
    CHECK_FALSE(g.is_quadrangulation());
    CHECK(face_verts(g, g.outer_face()) == std::vector<VertexId>{0, 1, 2});
    std::set<std::vector<VertexId>> all;
    for (FaceId f = 0; f < g.face_count(); ++f) {
        CHECK(g.face(f).degree() == 3);
        // boundary starts at its lowest dart id
        CHECK(*std::min_element(g.face(f).boundary.begin(), g.face(f).boundary.end()) ==
              g.face(f).boundary.front());
        all.insert(face_verts(g, f));
    }
    std::set<std::vector<VertexId>> expect{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    CHECK(all == expect);
}

TEST_CASE("k4 dual") {
    PlaneGraph g = k4();
    DualGraph d = g.dual();
    CHECK(d.face_count == 4);
    CHECK(d.edges.size() == 6);
    for (int f = 0; f < 4; ++f) CHECK(d.degree[f] == 3);
    for (EdgeId e = 0; e < 6; ++e) {
        CHECK(d.edges[e].primal == e);
        CHECK(d.edges[e].from != d.edges[e].to);
    }
}

TEST_CASE("guard verification") {
    PlaneGraph g = k4();
    EdgeGuardSet s;
    s.insert(0, 1);
    auto rep = g.verify_guard_set(s);
    CHECK(rep.valid);
    CHECK(rep.unguarded.empty());

    EdgeGuardSet empty;
    rep = g.verify_guard_set(empty);
    CHECK_FALSE(rep.valid);
    CHECK(rep.unguarded.size() == 4);

    EdgeGuardSet bogus;
    bogus.edges.insert(VertexPair(0, 0));
    CHECK_THROWS_AS((void)g.verify_guard_set(bogus), std::invalid_argument);

    // C4 needs one edge; a guard on 0-1 sees both 4-gon faces
    PlaneGraph q = c4();
    EdgeGuardSet qs;
    qs.insert(0, 1);
    CHECK(q.verify_guard_set(qs).valid);
}

TEST_CASE("quadrangulation predicate") {
    PlaneGraph q = c4();
    CHECK(q.vertex_count() == 4);
    CHECK(q.edge_count() == 4);
    CHECK(q.face_count() == 2);
    CHECK(q.is_quadrangulation());
    CHECK_FALSE(q.is_triangulation());
    DualGraph d = q.dual();
    CHECK(d.face_count == 2);
    for (int f = 0; f < 2; ++f) CHECK(d.degree[f] == 4);
}

TEST_CASE("build rejects structural defects") {
    // one-sided adjacency
    CHECK_THROWS_AS(PlaneGraph::build(2, {{1}, {}}, {0, 1}), std::invalid_argument);
    // loop
    CHECK_THROWS_AS(PlaneGraph::build(2, {{0, 1}, {0}}, {0, 1}), std::invalid_argument);
    // parallel edge
    CHECK_THROWS_AS(PlaneGraph::build(2, {{1, 1}, {0, 0}}, {0, 1}), std::invalid_argument);
    // disconnected
    CHECK_THROWS_AS(PlaneGraph::build(4, {{1}, {0}, {3}, {2}}, {0, 1}), std::invalid_argument);
    // outer pair is not an edge
    CHECK_THROWS_AS(PlaneGraph::build(4, {{1, 3}, {2, 0}, {3, 1}, {0, 2}}, {0, 2}),
                    std::invalid_argument);
    // K5 fails the Euler check under any rotation system
    std::vector<std::vector<VertexId>> k5(5);
    for (VertexId v = 0; v < 5; ++v)
        for (VertexId w = 0; w < 5; ++w)
            if (w != v) k5[v].push_back(w);
    CHECK_THROWS_AS(PlaneGraph::build(5, k5, {0, 1}), std::invalid_argument);
}

TEST_CASE("build_from_faces reproduces a direct build") {
    // the four oriented face cycles of the k4 fixture
    std::vector<std::vector<VertexId>> faces{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}};
    PlaneGraph g = build_from_faces(4, faces, {0, 1});
    CHECK(serialize_pg1(g) == serialize_pg1(k4()));
}

TEST_CASE("face list builder stack") {
    FaceListBuilder fb({{0, 1, 2}, {2, 1, 0}});
    fb.stack(0, 3);
    CHECK(fb.face_count() == 4);
    CHECK(fb.face(0) == std::vector<VertexId>{0, 1, 3});
    CHECK(fb.face(2) == std::vector<VertexId>{1, 2, 3});
    CHECK(fb.face(3) == std::vector<VertexId>{2, 0, 3});
    PlaneGraph g = build_from_faces(4, fb.faces(), {1, 0});
    CHECK(g.is_triangulation());
    CHECK(g.degree(3) == 3);
    CHECK(face_verts(g, g.outer_face()) == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("face list builder quad split") {
    FaceListBuilder fb({{0, 1, 2, 3}, {3, 2, 1, 0}});
    fb.split_quad(0, 4, 0);  // join 4 to the pair {0,2}
    PlaneGraph g = build_from_faces(5, fb.faces(), {0, 1});
    CHECK(g.is_quadrangulation());
    CHECK(g.degree(4) == 2);
    CHECK(g.has_edge(4, 0));
    CHECK(g.has_edge(4, 2));
    CHECK_FALSE(g.has_edge(4, 1));

    FaceListBuilder fb2({{0, 1, 2, 3}, {3, 2, 1, 0}});
    fb2.split_quad(0, 4, 1);  // join 4 to the pair {1,3}
    PlaneGraph g2 = build_from_faces(5, fb2.faces(), {0, 1});
    CHECK(g2.is_quadrangulation());
    CHECK(g2.has_edge(4, 1));
    CHECK(g2.has_edge(4, 3));
}
