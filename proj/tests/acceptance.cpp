// Acceptance gate for the guard library: ten end-to-end criteria, one line
// of output each. Exit code 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "enum_util.hpp"
#include "planeguard/cli.hpp"
#include "planeguard/face_builder.hpp"
#include "planeguard/generators.hpp"
#include "planeguard/graph_io.hpp"
#include "planeguard/oracle.hpp"
#include "planeguard/quad_guard.hpp"
#include "planeguard/stacked_guard.hpp"
#include "planeguard/stacking.hpp"

using namespace planeguard;

namespace {

// pinned run parameters and tolerances
constexpr int kSweepSeeds = 20;
constexpr int kSweepStep = 5000;       // sweep instance s has n = kSweepStep * s
constexpr int kEnumMaxN = 9;
constexpr long kEnumSequences = 11464; // stacking sequences with 4 <= n <= 9
constexpr double kOracleBudgetSec = 10.0;
constexpr double kSolveBudgetSec = 5.0;
constexpr double kCounterRatioTol = 1.10;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

// every stacked solver run feeds the ledger criterion
std::vector<std::pair<int, StackedResult>> stacked_runs;

StackedResult run_stacked(const PlaneGraph& g) {
    StackedResult r = guard_stacked(g);
    stacked_runs.emplace_back(g.vertex_count(), r);
    return r;
}

bool roundtrip_ok(const PlaneGraph& g, const EdgeGuardSet& guards) {
    std::string pg = serialize_pg1(g);
    if (serialize_pg1(parse_pg1(pg)) != pg) return false;
    std::string gs = serialize_guards(guards);
    return serialize_guards(parse_guards(gs)) == gs;
}

PlaneGraph six_fixture() {
    FaceListBuilder fb({{0, 1, 2}, {2, 1, 0}});
    fb.stack(0, 3);
    fb.stack(0, 4);
    fb.stack(2, 5);
    return build_from_faces(6, fb.faces(), {1, 0});
}

PlaneGraph seven_fixture(char shape) {
    FaceListBuilder fb({{0, 1, 2}, {2, 1, 0}});
    fb.stack(0, 3);
    fb.stack(0, 4);
    switch (shape) {
        case 'a':
            fb.stack(0, 5);
            fb.stack(0, 6);
            break;
        case 'b':
            fb.stack(0, 5);
            fb.stack(2, 6);
            break;
        default:
            fb.stack(2, 5);
            fb.stack(3, 6);
            break;
    }
    return build_from_faces(7, fb.faces(), {1, 0});
}

// quadrangulation structure facts checked on every generated instance:
// both colors and exactly two monochromatic edges on every face, the
// bichromatic edges are exactly the 2-factor, and the 2-factor is 2-regular
bool coloring_facts_hold(const PlaneGraph& g, const QuadPipelineResult& full) {
    ColoringCheckReport rep = validate_guard_coloring(g, full.coloring);
    if (!rep.valid) return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexPair uv = g.edge_endpoints(e);
        bool bi = full.coloring.color[uv.a] != full.coloring.color[uv.b];
        if (bi != (bool)full.h.member[e]) return false;
    }
    std::vector<int> hdeg(g.face_count(), 0);
    DualGraph d = g.dual();
    for (EdgeId e : full.h.edges) {
        ++hdeg[d.edges[e].from];
        ++hdeg[d.edges[e].to];
    }
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (hdeg[f] != 2) return false;
        int mono = 0;
        for (DartId dt : g.face(f).boundary) {
            const Dart& dart = g.dart(dt);
            if (full.coloring.color[dart.tail] == full.coloring.color[dart.head]) ++mono;
        }
        if (mono != 2) return false;
    }
    return true;
}

std::string cli_transcript() {
    std::ostringstream all;
    auto step = [&](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = cli_run(args, in, out, err);
        all << code << "|" << out.str() << "|" << err.str() << "\n";
        return out.str();
    };
    std::string pg = step({"gen", "--family", "rand-quad2d", "--n", "500", "--seed", "9"}, "");
    std::string gs = step({"solve", "--trace"}, pg);
    step({"render", "--format", "dot"}, pg);
    std::string spg = step({"gen", "--family", "rand-stacked", "--n", "300", "--seed", "9"}, "");
    step({"solve"}, spg);
    step({"oracle", "--count"}, serialize_pg1(six_fixture()));
    (void)gs;
    return all.str();
}

}  // namespace

int main() {
    std::vector<Verdict> verdicts(11);

    // 1: the oracle reproduces the known minima of the gadget quadrangulations
    {
        Verdict& v = verdicts[1];
        v.name = "qk-oracle-minimum";
        auto t0 = Clock::now();
        bool ok = true;
        std::ostringstream det;
        for (int k = 1; k <= 3; ++k) {
            OracleResult o = min_edge_guards(gen_qk(k));
            if (!o.feasible || o.minimum != k) {
                ok = false;
                det << "q" << k << " gave " << o.minimum << "; ";
            }
        }
        double dt = since(t0);
        if (dt >= kOracleBudgetSec) {
            ok = false;
            det << "took " << dt << "s";
        }
        v.pass = ok;
        std::ostringstream d;
        d << "k=1..3 exact in " << dt << "s";
        v.detail = ok ? d.str() : det.str();
    }

    // 2 and 3 share one sweep over all generated quadrangulations
    long quad_instances = 0, bad_guard = 0, bad_bound = 0, bad_color = 0, bad_rt_quad = 0;
    {
        auto quad_instance = [&](const PlaneGraph& g) {
            ++quad_instances;
            QuadPipelineResult full = guard_quadrangulation_full(g);
            if (!g.verify_guard_set(full.guards).valid) ++bad_guard;
            if (full.guards.size() > g.vertex_count() / 3) ++bad_bound;
            if (!coloring_facts_hold(g, full)) ++bad_color;
            if (!roundtrip_ok(g, full.guards)) ++bad_rt_quad;
        };
        for (int k = 1; k <= 200; ++k) quad_instance(gen_qk(k));
        for (int s = 1; s <= kSweepSeeds; ++s)
            quad_instance(gen_random_quad_2deg(kSweepStep * s, (std::uint64_t)s));

        Verdict& v2 = verdicts[2];
        v2.name = "quad-guards-within-third";
        v2.pass = bad_guard == 0 && bad_bound == 0;
        std::ostringstream d2;
        d2 << quad_instances << " instances, " << bad_guard << " invalid, " << bad_bound
           << " over bound";
        v2.detail = d2.str();

        Verdict& v3 = verdicts[3];
        v3.name = "quad-coloring-structure";
        v3.pass = bad_color == 0;
        std::ostringstream d3;
        d3 << quad_instances << " instances, " << bad_color << " violations";
        v3.detail = d3.str();
    }

    // 4: exhaustive small stacked triangulations plus a large random sweep
    long enum_seen = 0, enum_distinct = 0, bad_stacked = 0, bad_oracle_gap = 0, bad_rt_stacked = 0;
    {
        std::set<std::vector<int>> codes;
        enumerate_stackings(kEnumMaxN, [&](const StackingTree& t, int n) {
            ++enum_seen;
            PlaneGraph g = realize_stacking_tree(t);
            if (!codes.insert(canonical_code(g)).second) return;
            ++enum_distinct;
            StackedResult r = run_stacked(g);
            if (!g.verify_guard_set(r.guards).valid || r.guards.size() > 2 * n / 7) ++bad_stacked;
            OracleResult o = min_edge_guards(g);
            if (!o.feasible || o.minimum > r.guards.size()) ++bad_oracle_gap;
            if (!roundtrip_ok(g, r.guards)) ++bad_rt_stacked;
        });
        for (int s = 1; s <= kSweepSeeds; ++s) {
            PlaneGraph g = gen_random_stacked(kSweepStep * s, (std::uint64_t)s);
            StackedResult r = run_stacked(g);
            if (!g.verify_guard_set(r.guards).valid ||
                r.guards.size() > 2 * g.vertex_count() / 7)
                ++bad_stacked;
            if (!roundtrip_ok(g, r.guards)) ++bad_rt_stacked;
        }
        Verdict& v = verdicts[4];
        v.name = "stacked-guards-within-two-sevenths";
        v.pass = enum_seen == kEnumSequences && bad_stacked == 0 && bad_oracle_gap == 0;
        std::ostringstream d;
        d << enum_seen << " sequences, " << enum_distinct << " distinct, " << bad_stacked
          << " bad runs, " << bad_oracle_gap << " below oracle";
        v.detail = d.str();
    }

    // 5: the lower bound family is tight
    {
        Verdict& v = verdicts[5];
        v.name = "lower-bound-family-tight";
        bool ok = true;
        std::ostringstream det;
        StackedLowerResult r2 = gen_stacked_lower(2);
        if (r2.graph.vertex_count() != 9) ok = false;
        OracleResult o2 = min_edge_guards(r2.graph);
        StackedResult s2 = run_stacked(r2.graph);
        if (!o2.feasible || o2.minimum != 2 || s2.guards.size() != 2) {
            ok = false;
            det << "k=2: oracle " << o2.minimum << " solver " << s2.guards.size() << "; ";
        }
        StackedLowerResult r4 = gen_stacked_lower(4);
        StackedResult s4 = run_stacked(r4.graph);
        if (r4.graph.vertex_count() != 16 || s4.guards.size() != 4 ||
            4 != 2 * r4.graph.vertex_count() / 7) {
            ok = false;
            det << "k=4: solver " << s4.guards.size() << "; ";
        }
        for (size_t i = 0; ok && i < r4.triangles.size(); ++i)
            for (size_t j = i + 1; ok && j < r4.triangles.size(); ++j)
                for (VertexId a : r4.triangles[i])
                    for (VertexId b : r4.triangles[j])
                        if (a == b || r4.graph.has_edge(a, b)) {
                            ok = false;
                            det << "triangles " << i << "," << j << " too close; ";
                        }
        v.pass = ok;
        v.detail = ok ? "n=9 needs 2, n=16 needs 4, triangles separated" : det.str();
    }

    // 6: the unique 6-vertex optimum is embedding independent
    {
        Verdict& v = verdicts[6];
        v.name = "six-vertex-unique-optimum";
        PlaneGraph base = six_fixture();
        std::vector<std::vector<VertexId>> rot;
        for (VertexId w = 0; w < base.vertex_count(); ++w) rot.push_back(base.rotation(w));
        bool ok = true;
        std::ostringstream det;
        int tried = 0;
        for (FaceId f = 0; f < base.face_count(); ++f) {
            DartId d0 = base.face(f).boundary.front();
            PlaneGraph g =
                PlaneGraph::build(6, rot, {base.dart(d0).tail, base.dart(d0).head});
            OracleOptions opt;
            opt.count_optima = true;
            OracleResult o = min_edge_guards(g, opt);
            ++tried;
            if (!o.feasible || o.minimum != 1 || o.optima != 1 ||
                o.best.edges != std::set<VertexPair>{VertexPair(1, 3)}) {
                ok = false;
                det << "outer face " << f << " broke; ";
            }
        }
        v.pass = ok && tried == 8;
        std::ostringstream d;
        d << tried << " outer faces, optimum always the single edge 1-3";
        v.detail = ok ? d.str() : det.str();
    }

    // 7: seven-vertex pockets extend any guarded corner
    {
        Verdict& v = verdicts[7];
        v.name = "seven-vertex-extension";
        bool ok = true;
        int combos = 0;
        std::ostringstream det;
        for (char shape : {'a', 'b', 'c'}) {
            PlaneGraph g = seven_fixture(shape);
            Region r = whole_graph_region(g);
            for (VertexId c : {0, 1, 2}) {
                ++combos;
                VertexPair e = extend_7(r, {c});
                EdgeGuardSet s;
                s.edges.insert(e);
                const auto& crot = g.rotation(c);
                s.edges.insert(VertexPair(c, *std::min_element(crot.begin(), crot.end())));
                if (!g.verify_guard_set(s).valid) {
                    ok = false;
                    det << "shape " << shape << " corner " << c << "; ";
                }
            }
        }
        v.pass = ok && combos == 9;
        v.detail = ok ? "9 shape/corner combos" : det.str();
    }

    // 9 runs before its report so its solver ledgers feed criterion 8
    Verdict& v9 = verdicts[9];
    {
        v9.name = "linear-work-counters";
        bool ok = true;
        std::ostringstream det;
        std::vector<double> quad_ratio, stacked_ratio;
        for (int n : {1000, 10000, 100000}) {
            PlaneGraph q = gen_random_quad_2deg(n, 1);
            auto t0 = Clock::now();
            QuadPipelineResult full = guard_quadrangulation_full(q);
            double dt = since(t0);
            quad_ratio.push_back((double)full.ops / n);
            if (n == 100000 && dt >= kSolveBudgetSec) {
                ok = false;
                det << "quad 1e5 took " << dt << "s; ";
            }
            PlaneGraph st = gen_random_stacked(n, 1);
            t0 = Clock::now();
            StackedResult r = run_stacked(st);
            dt = since(t0);
            stacked_ratio.push_back((double)r.tree_ops / n);
            if (n == 100000 && dt >= kSolveBudgetSec) {
                ok = false;
                det << "stacked 1e5 took " << dt << "s; ";
            }
        }
        auto spread = [](const std::vector<double>& xs) {
            return *std::max_element(xs.begin(), xs.end()) /
                   *std::min_element(xs.begin(), xs.end());
        };
        double qs = spread(quad_ratio), ss = spread(stacked_ratio);
        if (qs > kCounterRatioTol) {
            ok = false;
            det << "quad ops/n spread " << qs << "; ";
        }
        if (ss > kCounterRatioTol) {
            ok = false;
            det << "stacked ops/n spread " << ss << "; ";
        }
        v9.pass = ok;
        std::ostringstream d;
        d << "ops/n spreads " << qs << " and " << ss << " within " << kCounterRatioTol;
        v9.detail = ok ? d.str() : det.str();
    }

    // 8: the reduction ledgers of every stacked run above
    {
        Verdict& v = verdicts[8];
        v.name = "stacked-ledger-budget";
        long runs = 0, bad_entry = 0, bad_sums = 0;
        for (const auto& [n, r] : stacked_runs) {
            ++runs;
            int sum_removed = 0, sum_added = 0;
            for (const LedgerEntry& e : r.ledger) {
                sum_removed += e.removed;
                sum_added += e.added;
                if (e.case_id != "base" && 7 * e.added > 2 * e.removed) ++bad_entry;
            }
            if (sum_removed != n || sum_added != r.guards.size()) ++bad_sums;
        }
        v.pass = runs > 0 && bad_entry == 0 && bad_sums == 0;
        std::ostringstream d;
        d << runs << " runs, " << bad_entry << " entries over budget, " << bad_sums
          << " inconsistent sums";
        v.detail = d.str();
    }

    // 10: byte-exact serialization and repeatable CLI output
    {
        Verdict& v = verdicts[10];
        v.name = "deterministic-io";
        long bad_rt = bad_rt_quad + bad_rt_stacked;
        std::string first = cli_transcript();
        std::string second = cli_transcript();
        bool cli_same = first == second;
        v.pass = bad_rt == 0 && cli_same;
        std::ostringstream d;
        d << quad_instances << "+" << (enum_distinct + kSweepSeeds) << " round trips, "
          << bad_rt << " mismatches, CLI replay " << (cli_same ? "identical" : "diverged");
        v.detail = d.str();
    }

    int failed = 0;
    for (int i = 1; i <= 10; ++i) {
        const Verdict& v = verdicts[i];
        std::cout << "criterion " << i << " (" << v.name << "): " << (v.pass ? "PASS" : "FAIL")
                  << " (" << v.detail << ")\n";
        if (!v.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
