#pragma once

#include <array>
#include <optional>

#include "planeguard/plane_graph.hpp"

namespace planeguard {

// History of a stacked triangulation as a rooted ternary tree. Node 0 is the
// root; its triangle is the outer face read in inner orientation. An internal
// node with triangle (p,q,r) and stacked vertex v has children for (v,p,q),
// (v,q,r), (v,r,p), in that order.
struct StackingNode {
    std::array<VertexId, 3> tri{-1, -1, -1};
    VertexId stacked = -1;  // -1 for leaves (empty faces)
    std::array<int, 3> child{-1, -1, -1};
    int parent = -1;
    int interior = 0;  // vertices strictly inside tri
    int height = 0;    // 0 for leaves, else 1 + max child height
    bool is_leaf() const { return stacked < 0; }
};

struct StackingTree {
    std::vector<StackingNode> nodes;
    int root = 0;
    int node_count() const { return (int)nodes.size(); }
    int vertex_count() const { return 3 + nodes[root].interior; }
};

struct Classification {
    bool is_quadrangulation = false;
    bool is_triangulation = false;
    bool is_stacked = false;
    std::optional<StackingTree> tree;
};

// Recognition relative to the designated outer face. A triangulation is
// stacked iff it reduces to the outer triangle by repeatedly deleting a
// degree-3 vertex with a triangle neighborhood, never touching the three
// outer corners; ties go to the lowest vertex id.
Classification classify(const PlaneGraph& g);

// Rebuilds the plane graph a tree describes. Vertex ids in the tree must be
// exactly 0..n-1. classify(realize_stacking_tree(t)).tree reproduces t.
PlaneGraph realize_stacking_tree(const StackingTree& t);

}  // namespace planeguard
