#include "planeguard/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace planeguard {

namespace {

struct Search {
    const std::vector<std::uint64_t>& cover;  // per edge: faces it guards
    std::uint64_t all;
    int best_size;
    std::vector<EdgeId> chosen;
    std::vector<EdgeId> best;
    std::uint64_t optima = 0;
    std::uint64_t nodes = 0;

    void run(std::uint64_t covered, std::uint64_t forbidden) {
        ++nodes;
        if (covered == all) {
            int size = (int)chosen.size();
            std::vector<EdgeId> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            if (size < best_size) {
                best_size = size;
                best = sorted;
                optima = 1;
            } else if (size == best_size) {
                ++optima;
                if (sorted < best) best = sorted;
            }
            return;
        }
        if ((int)chosen.size() + 1 > best_size) return;
        int fid = std::countr_zero(~covered & all);  // lowest uncovered face
        std::uint64_t newly_forbidden = 0;
        for (EdgeId e = 0; e < (EdgeId)cover.size(); ++e) {
            if (!(cover[e] >> fid & 1) || (forbidden >> e & 1)) continue;
            chosen.push_back(e);
            run(covered | cover[e], forbidden | newly_forbidden);
            chosen.pop_back();
            newly_forbidden |= 1ULL << e;
        }
    }
};

}  // namespace

OracleResult min_edge_guards(const PlaneGraph& g, const OracleOptions& opt) {
    int m = g.edge_count(), f = g.face_count();
    if (!opt.override_limit && m > opt.edge_limit)
        throw std::invalid_argument("instance has " + std::to_string(m) +
                                    " edges, over the oracle limit of " +
                                    std::to_string(opt.edge_limit));
    if (m > 64 || f > 64) throw std::invalid_argument("instance beyond oracle capacity (64)");

    std::vector<std::uint64_t> vmask(g.vertex_count(), 0);
    for (const Face& fc : g.faces())
        for (DartId d : fc.boundary) vmask[g.dart(d).tail] |= 1ULL << fc.id;
    std::vector<std::uint64_t> cover(m);
    for (EdgeId e = 0; e < m; ++e) {
        auto [a, b] = g.edge_endpoints(e);
        cover[e] = vmask[a] | vmask[b];
    }

    int cap = opt.max_size >= 0 ? std::min(opt.max_size, m) : m;
    Search s{cover, f == 64 ? ~0ULL : (1ULL << f) - 1, cap + 1, {}, {}};
    s.run(0, 0);

    OracleResult res;
    res.nodes = s.nodes;
    if (s.best_size > cap) return res;  // infeasible within max_size
    res.feasible = true;
    res.minimum = s.best_size;
    for (EdgeId e : s.best) {
        auto [a, b] = g.edge_endpoints(e);
        res.best.insert(a, b);
    }
    if (opt.count_optima) res.optima = s.optima;
    return res;
}

}  // namespace planeguard
