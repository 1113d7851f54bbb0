#pragma once

#include <array>
#include <cstdint>

#include "planeguard/plane_graph.hpp"

namespace planeguard {

// Seeded PRNG behind all random generators; the seed is the initial state.
// The sequence is part of the external reproducibility contract (README).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

enum class Family { qk, stacked_lower, rand_stacked, rand_quad_2deg };

struct GenSpec {
    Family family = Family::qk;
    int size = 1;  // k for the two families, n for the random generators
    std::uint64_t seed = 0;
};

// Quadrangulation on n = 4k+2 vertices needing k guards: k four-cycle
// gadgets strung between two hubs s = 0 and t = 1.
PlaneGraph gen_qk(int k);

struct StackedLowerResult {
    PlaneGraph graph;
    // One inserted triangle {a,b,c} per face of the base triangulation,
    // vertex-disjoint from that face.
    std::vector<std::array<VertexId, 3>> triangles;
};

// Stacked triangulation on n = (7k+4)/2 vertices (k even) needing 2n/7
// guards: a k-face base triangulation with a separated triangle planted in
// every face, the outer one included.
StackedLowerResult gen_stacked_lower(int k);

PlaneGraph gen_random_stacked(int n, std::uint64_t seed);

// 2-degenerate quadrangulation grown by repeated degree-2 face splits.
PlaneGraph gen_random_quad_2deg(int n, std::uint64_t seed);

PlaneGraph generate(const GenSpec& spec);

}  // namespace planeguard
