#include "planeguard/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "planeguard/generators.hpp"
#include "planeguard/graph_io.hpp"
#include "planeguard/oracle.hpp"
#include "planeguard/quad_guard.hpp"
#include "planeguard/render.hpp"
#include "planeguard/stacked_guard.hpp"
#include "planeguard/stacking.hpp"

namespace planeguard {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << text;
}

Family parse_family(const std::string& name) {
    if (name == "qk") return Family::qk;
    if (name == "stacked-lower") return Family::stacked_lower;
    if (name == "rand-stacked") return Family::rand_stacked;
    if (name == "rand-quad2d") return Family::rand_quad_2deg;
    throw std::runtime_error("unknown family: " + name);
}

bool family_takes_k(Family f) { return f == Family::qk || f == Family::stacked_lower; }

struct SolveOutcome {
    EdgeGuardSet guards;
    long long ops = 0;
};

SolveOutcome solve_dispatch(const PlaneGraph& g, std::string algo, bool trace, std::ostream& err) {
    if (algo == "auto") {
        if (g.is_quadrangulation()) {
            algo = "quad";
        } else if (classify(g).is_stacked) {
            algo = "stacked";
        } else {
            throw std::runtime_error(
                "input is neither a quadrangulation nor a stacked triangulation; pick --algo");
        }
    }
    SolveOutcome res;
    if (algo == "quad") {
        auto full = guard_quadrangulation_full(g);
        res.guards = full.guards;
        res.ops = full.ops;
        if (trace)
            err << "quad: n=" << g.vertex_count() << " two-factor=" << full.h.edges.size()
                << " guards=" << full.guards.size() << " ops=" << full.ops << "\n";
    } else {
        auto st = guard_stacked(g);
        res.guards = st.guards;
        res.ops = st.tree_ops;
        if (trace) {
            for (const auto& e : st.ledger)
                err << e.case_id << " -" << e.removed << " +" << e.added << "\n";
            err << "stacked: n=" << g.vertex_count() << " guards=" << st.guards.size()
                << " fallbacks=" << st.fallbacks << " ops=" << st.tree_ops << "\n";
        }
    }
    return res;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"edge guards for quadrangulations and stacked triangulations"};
    app.require_subcommand(1);

    std::string family_name, input = "-", output = "-", algo = "auto", format = "svg";
    std::string graph_path, guards_path, render_guards;
    int k = -1, n = -1, max_size = -1, edge_limit = 40;
    std::uint64_t seed = 0;
    bool trace = false, count_optima = false, force = false;
    std::vector<int> sizes;

    auto* cgen = app.add_subcommand("gen", "generate a graph family member (PG1 on stdout)");
    cgen->add_option("--family", family_name, "qk | stacked-lower | rand-stacked | rand-quad2d")
        ->required();
    cgen->add_option("--k", k, "parameter for qk and stacked-lower");
    cgen->add_option("--n", n, "vertex count for the random families");
    cgen->add_option("--seed", seed, "PRNG seed (SplitMix64 state)");
    cgen->add_option("-o,--output", output, "output file, - for stdout");

    auto* csolve = app.add_subcommand("solve", "compute a guard set (GUARDS on stdout)");
    csolve->add_option("input", input, "PG1 file, - for stdin");
    csolve->add_option("--algo", algo, "auto | quad | stacked")
        ->check(CLI::IsMember({"auto", "quad", "stacked"}));
    csolve->add_flag("--trace", trace, "per-step ledger on stderr");
    csolve->add_option("-o,--output", output, "output file, - for stdout");

    auto* cverify = app.add_subcommand("verify", "check a guard set against a graph");
    cverify->add_option("graph", graph_path, "PG1 file")->required();
    cverify->add_option("guards", guards_path, "GUARDS file")->required();

    auto* coracle = app.add_subcommand("oracle", "exact minimum guard set (small graphs)");
    coracle->add_option("input", input, "PG1 file, - for stdin");
    coracle->add_option("--max-size", max_size, "prune at this size, -1 unbounded");
    coracle->add_flag("--count", count_optima, "also count the optima");
    coracle->add_option("--edge-limit", edge_limit, "instance size guard rail");
    coracle->add_flag("--force", force, "run despite the edge limit");
    coracle->add_option("-o,--output", output, "output file, - for stdout");

    auto* cbench = app.add_subcommand("bench", "time the solvers over a size sweep (CSV)");
    cbench->add_option("--family", family_name, "qk | stacked-lower | rand-stacked | rand-quad2d")
        ->required();
    cbench->add_option("--sizes", sizes, "comma separated k or n values")
        ->required()
        ->delimiter(',');
    cbench->add_option("--seed", seed, "PRNG seed for the random families");

    auto* crender = app.add_subcommand("render", "draw the graph");
    crender->add_option("input", input, "PG1 file, - for stdin");
    crender->add_option("--format", format, "dot | svg")
        ->check(CLI::IsMember({"dot", "svg"}));
    crender->add_option("--guards", render_guards, "GUARDS file to highlight");
    crender->add_option("-o,--output", output, "output file, - for stdout");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cgen)) {
            Family fam = parse_family(family_name);
            GenSpec spec;
            spec.family = fam;
            spec.seed = seed;
            if (family_takes_k(fam)) {
                if (k < 0) throw std::runtime_error("this family needs --k");
                spec.size = k;
            } else {
                if (n < 0) throw std::runtime_error("this family needs --n");
                spec.size = n;
            }
            emit(output, out, serialize_pg1(generate(spec)));
            return 0;
        }
        if (app.got_subcommand(csolve)) {
            PlaneGraph g = parse_pg1(slurp(input, in));
            auto res = solve_dispatch(g, algo, trace, err);
            emit(output, out, serialize_guards(res.guards));
            return 0;
        }
        if (app.got_subcommand(cverify)) {
            if (graph_path == "-" && guards_path == "-")
                throw std::runtime_error("at most one of the inputs can be stdin");
            PlaneGraph g = parse_pg1(slurp(graph_path, in));
            EdgeGuardSet gs = parse_guards(slurp(guards_path, in));
            auto rep = g.verify_guard_set(gs);
            if (rep.valid) {
                out << "valid " << gs.size() << "\n";
                return 0;
            }
            out << "invalid";
            for (FaceId f : rep.unguarded) out << " " << f;
            out << "\n";
            return 1;
        }
        if (app.got_subcommand(coracle)) {
            PlaneGraph g = parse_pg1(slurp(input, in));
            OracleOptions opt;
            opt.max_size = max_size;
            opt.count_optima = count_optima;
            opt.edge_limit = edge_limit;
            opt.override_limit = force;
            auto res = min_edge_guards(g, opt);
            if (!res.feasible) {
                err << "no guard set within the requested size\n";
                return 1;
            }
            std::ostringstream body;
            body << "minimum " << res.minimum << "\n";
            if (count_optima) body << "optima " << res.optima << "\n";
            body << serialize_guards(res.best);
            emit(output, out, body.str());
            return 0;
        }
        if (app.got_subcommand(cbench)) {
            Family fam = parse_family(family_name);
            out << "family,size,n,guards,bound,micros,ops\n";
            for (int s : sizes) {
                GenSpec spec;
                spec.family = fam;
                spec.size = s;
                spec.seed = seed;
                PlaneGraph g = generate(spec);
                bool quad = g.is_quadrangulation();
                auto t0 = std::chrono::steady_clock::now();
                auto res = solve_dispatch(g, quad ? "quad" : "stacked", false, err);
                auto t1 = std::chrono::steady_clock::now();
                long long us =
                    std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
                int nn = g.vertex_count();
                int bound = quad ? nn / 3 : 2 * nn / 7;
                out << family_name << "," << s << "," << nn << "," << res.guards.size() << ","
                    << bound << "," << us << "," << res.ops << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(crender)) {
            PlaneGraph g = parse_pg1(slurp(input, in));
            EdgeGuardSet gs;
            bool have_guards = !render_guards.empty();
            if (have_guards) gs = parse_guards(slurp(render_guards, in));
            const EdgeGuardSet* gp = have_guards ? &gs : nullptr;
            emit(output, out, format == "dot" ? render_dot(g, gp) : render_svg(g, gp));
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace planeguard
