#pragma once

#include <cstdint>
#include <optional>

#include "planeguard/plane_graph.hpp"

namespace planeguard {

struct OracleResult {
    bool feasible = false;  // false when no set within max_size exists
    int minimum = -1;
    EdgeGuardSet best;  // lexicographically smallest optimum
    std::uint64_t optima = 0;  // populated only when counting was requested
    std::uint64_t nodes = 0;   // search nodes explored
};

struct OracleOptions {
    int max_size = -1;         // -1: unbounded
    bool count_optima = false;
    int edge_limit = 40;       // refuse larger instances unless overridden
    bool override_limit = false;
};

// Exact minimum edge guard set by branch and bound on the face-coverage
// set cover. Branches on the lowest-id uncovered face; the i-th branch takes
// the face's i-th candidate edge and forbids the earlier ones, so the
// optimum count is exact.
OracleResult min_edge_guards(const PlaneGraph& g, const OracleOptions& opt = {});

}  // namespace planeguard
