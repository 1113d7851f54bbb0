#include <stdexcept>
#include "doctest.h"
#include "planeguard/face_builder.hpp"
#include "planeguard/generators.hpp"
#include "planeguard/graph_io.hpp"
#include "planeguard/stacking.hpp"

using namespace planeguard;

namespace {

PlaneGraph k4() {
    return PlaneGraph::build(4, {{2, 3, 1}, {2, 0, 3}, {1, 3, 0}, {0, 2, 1}}, {0, 1});
}

PlaneGraph octahedron() {
    return build_from_faces(
        6,
        {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}},
        {0, 1});
}

}  // namespace

TEST_CASE("classify recognizes k4") {
    Classification c = classify(k4());
    CHECK(c.is_triangulation);
    CHECK_FALSE(c.is_quadrangulation);
    CHECK(c.is_stacked);
    REQUIRE(c.tree.has_value());
    const StackingTree& t = *c.tree;
    CHECK(t.vertex_count() == 4);
    CHECK(t.node_count() == 4);
    const StackingNode& root = t.nodes[t.root];
    // outer pair (0,1) read in inner orientation
    CHECK(root.tri == std::array<VertexId, 3>{1, 0, 2});
    CHECK(root.stacked == 3);
    CHECK(root.interior == 1);
    CHECK(root.height == 1);
    for (int s = 0; s < 3; ++s) {
        const StackingNode& leaf = t.nodes[root.child[s]];
        CHECK(leaf.is_leaf());
        CHECK(leaf.parent == t.root);
        CHECK(leaf.interior == 0);
    }
}

TEST_CASE("realize inverts classify") {
    auto round = [](const PlaneGraph& g) {
        Classification c = classify(g);
        REQUIRE(c.is_stacked);
        PlaneGraph back = realize_stacking_tree(*c.tree);
        CHECK(serialize_pg1(back) == serialize_pg1(g));
    };
    round(k4());
    round(gen_random_stacked(50, 7));
    round(gen_random_stacked(123, 99));
    round(gen_stacked_lower(4).graph);
}

TEST_CASE("classify rejects non-stacked inputs") {
    Classification quad = classify(gen_random_quad_2deg(30, 5));
    CHECK(quad.is_quadrangulation);
    CHECK_FALSE(quad.is_triangulation);
    CHECK_FALSE(quad.is_stacked);
    CHECK_FALSE(quad.tree.has_value());

    // the octahedron is a triangulation but has no removable degree-3 vertex
    Classification oct = classify(octahedron());
    CHECK(oct.is_triangulation);
    CHECK_FALSE(oct.is_stacked);
    CHECK_FALSE(oct.tree.has_value());

    Classification c4 = classify(PlaneGraph::build(4, {{1, 3}, {2, 0}, {3, 1}, {0, 2}}, {0, 1}));
    CHECK(c4.is_quadrangulation);
    CHECK_FALSE(c4.is_stacked);
}

TEST_CASE("tree caches interior and height consistently") {
    PlaneGraph g = gen_random_stacked(40, 11);
    Classification c = classify(g);
    REQUIRE(c.is_stacked);
    const StackingTree& t = *c.tree;
    for (int i = 0; i < t.node_count(); ++i) {
        const StackingNode& nd = t.nodes[i];
        if (nd.is_leaf()) {
            CHECK(nd.interior == 0);
            CHECK(nd.height == 0);
            continue;
        }
        int kids = 0, tallest = 0;
        for (int s = 0; s < 3; ++s) {
            REQUIRE(nd.child[s] >= 0);
            const StackingNode& ch = t.nodes[nd.child[s]];
            CHECK(ch.parent == i);
            kids += ch.interior;
            tallest = std::max(tallest, ch.height);
        }
        CHECK(nd.interior == kids + 1);
        CHECK(nd.height == tallest + 1);
    }
    CHECK(t.vertex_count() == g.vertex_count());
}
