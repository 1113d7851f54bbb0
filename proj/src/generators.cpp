#include "planeguard/generators.hpp"

#include <stdexcept>

#include "planeguard/face_builder.hpp"

namespace planeguard {

PlaneGraph gen_qk(int k) {
    if (k < 1) throw std::invalid_argument("gen_qk requires k >= 1");
    const VertexId s = 0, t = 1;
    auto a = [](int i) { return 2 + 4 * (i - 1); };  // gadget i is 1-based
    auto b = [&](int i) { return a(i) + 1; };
    auto c = [&](int i) { return a(i) + 2; };
    auto d = [&](int i) { return a(i) + 3; };

    std::vector<std::vector<VertexId>> faces;
    for (int i = 1; i <= k; ++i) {
        faces.push_back({s, a(i), b(i), c(i)});
        faces.push_back({a(i), d(i), c(i), b(i)});
        faces.push_back({a(i), t, c(i), d(i)});
        if (i < k) faces.push_back({s, c(i), t, a(i + 1)});
    }
    faces.push_back({s, c(k), t, a(1)});
    return build_from_faces(4 * k + 2, faces, {s, c(k)});
}

StackedLowerResult gen_stacked_lower(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("gen_stacked_lower requires even k >= 2");
    int base_n = (k + 4) / 2;

    FaceListBuilder fb({{0, 1, 2}, {2, 1, 0}});
    // Base triangulation: stack every new vertex into the lowest inner face
    // slot, which is always slot 0.
    for (VertexId v = 3; v < base_n; ++v) fb.stack(0, v);

    int base_faces = fb.face_count();  // = k, the sphere count
    std::vector<std::array<VertexId, 3>> triangles;
    VertexId fresh = base_n;
    std::pair<VertexId, VertexId> outer{-1, -1};
    for (int i = 0; i < base_faces; ++i) {
        VertexId va = fresh++, vb = fresh++, vc = fresh++;
        fb.stack(i, va);  // slot i = (x,y,z) -> (x,y,a)
        fb.stack(i, vb);  // slot i -> (x,y,b), appends (y,a,b), (a,x,b)
        fb.stack(fb.face_count() - 1, vc);  // (a,x,b) -> (a,x,c), (x,b,c), (b,a,c)
        triangles.push_back({va, vb, vc});
        // The triangle planted in the base's slot-1 face becomes the new
        // outer face; (b,a,c) is a face of the final graph.
        if (i == 1) outer = {vb, va};
    }
    return StackedLowerResult{build_from_faces((7 * k + 4) / 2, fb.faces(), outer),
                              std::move(triangles)};
}

PlaneGraph gen_random_stacked(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("gen_random_stacked requires n >= 3");
    FaceListBuilder fb({{0, 1, 2}, {2, 1, 0}});
    SplitMix64 rng(seed);
    std::vector<int> inner{0};  // face slots eligible for stacking
    for (VertexId v = 3; v < n; ++v) {
        int slot = inner[(int)(rng.next() % inner.size())];
        fb.stack(slot, v);  // slot keeps its position in `inner`
        inner.push_back(fb.face_count() - 2);
        inner.push_back(fb.face_count() - 1);
    }
    return build_from_faces(n, fb.faces(), {1, 0});
}

PlaneGraph gen_random_quad_2deg(int n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("gen_random_quad_2deg requires n >= 4");
    FaceListBuilder fb({{0, 1, 2, 3}, {3, 2, 1, 0}});
    SplitMix64 rng(seed);
    for (VertexId w = 4; w < n; ++w) {
        int slot = (int)(rng.next() % fb.face_count());  // sphere view: any face
        int bit = (int)(rng.next() & 1);
        fb.split_quad(slot, w, bit);
    }
    // Edge 0-1 is never subdivided away, so the face traced from 0->1 is a
    // stable outer designation.
    return build_from_faces(n, fb.faces(), {0, 1});
}

PlaneGraph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::qk:
            return gen_qk(spec.size);
        case Family::stacked_lower:
            return gen_stacked_lower(spec.size).graph;
        case Family::rand_stacked:
            return gen_random_stacked(spec.size, spec.seed);
        case Family::rand_quad_2deg:
            return gen_random_quad_2deg(spec.size, spec.seed);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace planeguard
