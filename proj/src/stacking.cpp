#include "planeguard/stacking.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "planeguard/face_builder.hpp"

namespace planeguard {

namespace {

bool triangle_neighborhood(const std::vector<std::set<VertexId>>& adj, VertexId v) {
    const auto& nb = adj[v];
    if (nb.size() != 3) return false;
    auto it = nb.begin();
    VertexId x = *it++, y = *it++, z = *it;
    return adj[x].count(y) && adj[y].count(z) && adj[z].count(x);
}

}  // namespace

Classification classify(const PlaneGraph& g) {
    Classification c;
    c.is_quadrangulation = g.is_quadrangulation();
    c.is_triangulation = g.is_triangulation();
    if (!c.is_triangulation) return c;

    int n = g.vertex_count();
    const Face& of = g.face(g.outer_face());
    auto [oa, ob] = g.outer_pair();
    VertexId third = -1;
    for (DartId d : of.boundary) {
        VertexId t = g.dart(d).tail;
        if (t != oa && t != ob) third = t;
    }
    // Outer boundary read backwards gives the triangle in inner orientation.
    std::array<VertexId, 3> root_tri{ob, oa, third};

    if (n == 3) {
        StackingTree t;
        StackingNode leaf;
        leaf.tri = root_tri;
        t.nodes.push_back(leaf);
        c.is_stacked = true;
        c.tree = std::move(t);
        return c;
    }

    std::vector<std::set<VertexId>> adj(n);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.rotation(v)) adj[v].insert(w);

    std::vector<char> corner(n, 0);
    corner[oa] = corner[ob] = corner[third] = 1;

    std::set<VertexId> candidates;
    for (VertexId v = 0; v < n; ++v)
        if (!corner[v] && triangle_neighborhood(adj, v)) candidates.insert(v);

    // Each record: the removed vertex and its neighbor triple at removal time.
    std::vector<std::pair<VertexId, std::array<VertexId, 3>>> removals;
    int remaining = n;
    while (remaining > 3 && !candidates.empty()) {
        VertexId v = *candidates.begin();
        candidates.erase(candidates.begin());
        if (!triangle_neighborhood(adj, v)) continue;  // stale entry
        auto it = adj[v].begin();
        std::array<VertexId, 3> nb{*it, *std::next(it), *std::next(it, 2)};
        for (VertexId w : nb) adj[w].erase(v);
        adj[v].clear();
        removals.push_back({v, nb});
        --remaining;
        for (VertexId w : nb)
            if (!corner[w] && triangle_neighborhood(adj, w)) candidates.insert(w);
    }
    if (remaining != 3) return c;  // stuck: not stacked over this outer face

    // Rebuild the tree by replaying removals backwards. Leaves are keyed by
    // their sorted corner triple; distinct leaves never share a triple.
    StackingTree t;
    StackingNode rootn;
    rootn.tri = root_tri;
    t.nodes.push_back(rootn);
    std::map<std::array<VertexId, 3>, int> leaf_by_triple;
    auto sorted3 = [](std::array<VertexId, 3> a) {
        std::sort(a.begin(), a.end());
        return a;
    };
    leaf_by_triple[sorted3(root_tri)] = 0;
    for (auto rit = removals.rbegin(); rit != removals.rend(); ++rit) {
        auto [v, nb] = *rit;
        auto key = leaf_by_triple.find(sorted3(nb));
        if (key == leaf_by_triple.end())
            throw std::logic_error("stacking replay lost a face");
        int id = key->second;
        leaf_by_triple.erase(key);
        auto [p, q, r] = t.nodes[id].tri;
        t.nodes[id].stacked = v;
        std::array<std::array<VertexId, 3>, 3> tris{{{v, p, q}, {v, q, r}, {v, r, p}}};
        for (int i = 0; i < 3; ++i) {
            StackingNode ch;
            ch.tri = tris[i];
            ch.parent = id;
            int cid = (int)t.nodes.size();
            t.nodes[id].child[i] = cid;
            t.nodes.push_back(ch);
            leaf_by_triple[sorted3(tris[i])] = cid;
        }
    }

    // Children have larger ids than parents, so one reverse sweep fills the
    // cached counts bottom-up.
    for (int id = (int)t.nodes.size() - 1; id >= 0; --id) {
        StackingNode& nd = t.nodes[id];
        if (nd.is_leaf()) continue;
        nd.interior = 1;
        nd.height = 0;
        for (int ch : nd.child) {
            nd.interior += t.nodes[ch].interior;
            nd.height = std::max(nd.height, t.nodes[ch].height);
        }
        ++nd.height;
    }

    c.is_stacked = true;
    c.tree = std::move(t);
    return c;
}

PlaneGraph realize_stacking_tree(const StackingTree& t) {
    int internal = 0;
    for (const auto& nd : t.nodes)
        if (!nd.is_leaf()) ++internal;
    int n = 3 + internal;

    std::vector<char> used(n, 0);
    auto claim = [&](VertexId v) {
        if (v < 0 || v >= n || used[v]) throw std::invalid_argument("tree vertex ids are not 0..n-1");
        used[v] = 1;
    };
    for (VertexId v : t.nodes[t.root].tri) claim(v);
    for (const auto& nd : t.nodes)
        if (!nd.is_leaf()) claim(nd.stacked);

    std::vector<std::vector<VertexId>> faces;
    const auto& rt = t.nodes[t.root].tri;
    faces.push_back({rt[2], rt[1], rt[0]});  // outer side
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        const StackingNode& nd = t.nodes[id];
        if (nd.is_leaf())
            faces.push_back({nd.tri[0], nd.tri[1], nd.tri[2]});
        else
            for (int i = 2; i >= 0; --i) stack.push_back(nd.child[i]);
    }
    return build_from_faces(n, faces, {rt[1], rt[0]});
}

}  // namespace planeguard
