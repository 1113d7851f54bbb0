#include "planeguard/quad_guard.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace planeguard {

Orientation euler_orient(const DualGraph& d) {
    int f = d.face_count, m = (int)d.edges.size();
    for (int v = 0; v < f; ++v)
        if (d.degree[v] != 4) throw std::invalid_argument("dual is not 4-regular");
    for (const DualEdge& e : d.edges)
        if (e.from == e.to) throw std::invalid_argument("dual has a loop");

    std::vector<std::vector<EdgeId>> adj(f);
    for (const DualEdge& e : d.edges) {
        adj[e.from].push_back(e.primal);
        adj[e.to].push_back(e.primal);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    // Hierholzer from dual vertex 0, always the lowest unused edge.
    Orientation o;
    o.dir.assign(m, {-1, -1});
    std::vector<int> ptr(f, 0);
    std::vector<char> used(m, 0);
    std::vector<FaceId> stack{0};
    int traversed = 0;
    while (!stack.empty()) {
        FaceId v = stack.back();
        while (ptr[v] < (int)adj[v].size() && used[adj[v][ptr[v]]]) ++ptr[v];
        if (ptr[v] == (int)adj[v].size()) {
            stack.pop_back();
            continue;
        }
        EdgeId e = adj[v][ptr[v]];
        used[e] = 1;
        ++traversed;
        FaceId w = d.edges[e].from == v ? d.edges[e].to : d.edges[e].from;
        o.dir[e] = {v, w};
        stack.push_back(w);
    }
    if (traversed != m) throw std::invalid_argument("dual is disconnected");
    return o;
}

TwoFactor two_factor(const DualGraph& d, const Orientation& o) {
    int m = (int)d.edges.size();
    // Bipartite double: out-copy 2v, in-copy 2w+1; edge ids carry over.
    // Every copy has degree exactly 2, so the double is a union of even
    // cycles and alternation picks a perfect matching.
    std::vector<std::array<std::pair<EdgeId, int>, 2>> inc(2 * d.face_count);
    std::vector<int> deg(2 * d.face_count, 0);
    for (EdgeId e = 0; e < m; ++e) {
        auto [a, b] = o.dir[e];
        int pa = 2 * a, pb = 2 * b + 1;
        if (deg[pa] >= 2 || deg[pb] >= 2)
            throw std::invalid_argument("orientation is not 2-in 2-out");
        inc[pa][deg[pa]++] = {e, pb};
        inc[pb][deg[pb]++] = {e, pa};
    }

    TwoFactor h;
    h.member.assign(m, 0);
    std::vector<char> visited(m, 0);
    for (EdgeId e0 = 0; e0 < m; ++e0) {
        if (visited[e0]) continue;
        // Walk the cycle through e0; keep every edge at even distance.
        auto [a0, b0] = o.dir[e0];
        int vertex = 2 * b0 + 1;
        EdgeId e = e0;
        int parity = 0;
        do {
            visited[e] = 1;
            if (parity == 0) h.member[e] = 1;
            parity ^= 1;
            const auto& pair = inc[vertex];
            EdgeId next = pair[0].first == e ? pair[1].first : pair[0].first;
            vertex = pair[0].first == e ? pair[1].second : pair[0].second;
            e = next;
        } while (e != e0);
    }
    for (EdgeId e = 0; e < m; ++e)
        if (h.member[e]) h.edges.push_back(e);
    return h;
}

GuardColoring parity_coloring(const PlaneGraph& g, const TwoFactor& h) {
    int n = g.vertex_count();
    GuardColoring c;
    c.color.assign(n, -1);
    c.color[0] = 0;
    std::queue<VertexId> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        VertexId v = bfs.front();
        bfs.pop();
        auto [d0, d1] = g.dart_range(v);
        for (DartId d = d0; d < d1; ++d) {
            VertexId w = g.dart(d).head;
            EdgeId e = g.dart(d).edge;
            int want = c.color[v] ^ (h.member[e] ? 1 : 0);
            if (c.color[w] < 0) {
                c.color[w] = want;
                bfs.push(w);
            } else if (c.color[w] != want) {
                // The membership vector is not a cut of the primal graph,
                // so H cannot have been a 2-factor of the dual.
                throw std::runtime_error("parity inconsistency at edge " + std::to_string(v) +
                                         "-" + std::to_string(w));
            }
        }
    }
    return c;
}

ColoringCheckReport validate_guard_coloring(const PlaneGraph& g, const GuardColoring& c) {
    ColoringCheckReport rep;
    for (const Face& f : g.faces()) {
        bool has[2] = {false, false};
        bool mono = false;
        for (DartId d : f.boundary) {
            int cu = c.color[g.dart(d).tail], cv = c.color[g.dart(d).head];
            has[cu] = true;
            if (cu == cv) mono = true;
        }
        if (!has[0] || !has[1]) rep.missing_color.push_back(f.id);
        if (!mono) rep.no_mono_edge.push_back(f.id);
    }
    rep.valid = rep.missing_color.empty() && rep.no_mono_edge.empty();
    return rep;
}

EdgeGuardSet coloring_to_guards(const PlaneGraph& g, const GuardColoring& c) {
    auto rep = validate_guard_coloring(g, c);
    if (!rep.valid) throw std::invalid_argument("not a guard coloring");

    int n = g.vertex_count(), m = g.edge_count();
    // Greedy maximal matchings inside the two monochromatic subgraphs,
    // scanning edges in id order.
    std::vector<char> matched(n, 0);
    std::vector<std::vector<VertexPair>> matching(2);
    for (EdgeId e = 0; e < m; ++e) {
        auto [a, b] = g.edge_endpoints(e);
        if (c.color[a] != c.color[b] || matched[a] || matched[b]) continue;
        matched[a] = matched[b] = 1;
        matching[c.color[a]].push_back({a, b});
    }

    auto patch_class = [&](int col) {
        EdgeGuardSet s;
        for (const auto& e : matching[col]) s.edges.insert(e);
        for (VertexId v = 0; v < n; ++v) {
            if (c.color[v] != col || matched[v]) continue;
            VertexId w = *std::min_element(g.rotation(v).begin(), g.rotation(v).end());
            s.insert(v, w);
        }
        return s;
    };

    EdgeGuardSet cand[3] = {patch_class(0), patch_class(1), {}};
    for (int col : {0, 1})
        for (const auto& e : matching[col]) cand[2].edges.insert(e);

    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (cand[i].size() < cand[best].size()) best = i;
    return cand[best];
}

QuadPipelineResult guard_quadrangulation_full(const PlaneGraph& g) {
    if (!g.is_quadrangulation())
        throw std::invalid_argument("input is not a quadrangulation");
    QuadPipelineResult r{{}, {}, {}, {}, 0};
    DualGraph d = g.dual();
    r.ops += g.dart_count() + (long)d.edges.size();
    r.orientation = euler_orient(d);
    r.ops += (long)d.edges.size();  // each dual edge traversed once
    r.h = two_factor(d, r.orientation);
    r.ops += (long)d.edges.size();  // each bipartite edge walked once
    r.coloring = parity_coloring(g, r.h);
    r.ops += g.dart_count();  // each dart examined once by the BFS
    r.guards = coloring_to_guards(g, r.coloring);
    r.ops += 3L * g.edge_count() + g.vertex_count();  // matching + patch scans
    return r;
}

EdgeGuardSet guard_quadrangulation(const PlaneGraph& g) {
    return guard_quadrangulation_full(g).guards;
}

}  // namespace planeguard
