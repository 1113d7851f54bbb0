#include "planeguard/face_builder.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace planeguard {

PlaneGraph build_from_faces(int n, const std::vector<std::vector<VertexId>>& faces,
                            std::pair<VertexId, VertexId> outer) {
    // succ[u][w] = q: in clockwise rotation around u, q follows w.
    std::vector<std::map<VertexId, VertexId>> succ(n);
    for (const auto& f : faces) {
        int k = (int)f.size();
        if (k < 3) throw std::invalid_argument("face with fewer than 3 vertices");
        for (int i = 0; i < k; ++i) {
            VertexId q = f[(i + k - 1) % k], u = f[i], w = f[(i + 1) % k];
            if (u < 0 || u >= n) throw std::invalid_argument("face vertex out of range");
            if (!succ[u].emplace(w, q).second)
                throw std::invalid_argument("dart " + std::to_string(u) + "->" +
                                            std::to_string(w) + " appears in two faces");
        }
    }

    std::vector<std::vector<VertexId>> rotations(n);
    for (VertexId u = 0; u < n; ++u) {
        if (succ[u].empty()) throw std::invalid_argument("isolated vertex " + std::to_string(u));
        VertexId start = succ[u].begin()->first;  // lowest neighbor id
        VertexId w = start;
        do {
            rotations[u].push_back(w);
            auto it = succ[u].find(w);
            if (it == succ[u].end())
                throw std::invalid_argument("open rotation at vertex " + std::to_string(u));
            w = it->second;
        } while (w != start && (int)rotations[u].size() <= (int)succ[u].size());
        if (rotations[u].size() != succ[u].size())
            throw std::invalid_argument("rotation at vertex " + std::to_string(u) +
                                        " does not close into one cycle");
    }
    return PlaneGraph::build(n, rotations, outer);
}

void FaceListBuilder::stack(int i, VertexId v) {
    auto f = faces_[i];
    if (f.size() != 3) throw std::invalid_argument("stack target is not a triangle");
    VertexId x = f[0], y = f[1], z = f[2];
    faces_[i] = {x, y, v};
    faces_.push_back({y, z, v});
    faces_.push_back({z, x, v});
}

void FaceListBuilder::split_quad(int i, VertexId w, int pair_bit) {
    auto f = faces_[i];
    if (f.size() != 4) throw std::invalid_argument("split target is not a quadrilateral");
    if (pair_bit) f = {f[1], f[2], f[3], f[0]};
    VertexId a = f[0], b = f[1], c = f[2], d = f[3];
    faces_[i] = {a, b, c, w};
    faces_.push_back({a, w, c, d});
}

}  // namespace planeguard
