#include "planeguard/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

namespace planeguard {

namespace {

bool is_guard(const EdgeGuardSet* guards, VertexId u, VertexId v) {
    return guards && guards->edges.count(VertexPair(u, v)) != 0;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

}  // namespace

std::string render_dot(const PlaneGraph& g, const EdgeGuardSet* guards) {
    std::ostringstream out;
    out << "graph planeguard {\n";
    out << "  node [shape=circle fontsize=10 width=0.3 fixedsize=true];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const VertexPair& e : g.edge_pairs()) {
        out << "  " << e.a << " -- " << e.b;
        if (is_guard(guards, e.a, e.b)) out << " [color=red penwidth=2.5]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_svg(const PlaneGraph& g, const EdgeGuardSet* guards) {
    const double size = 640.0, cx = size / 2, cy = size / 2, radius = size / 2 - 40.0;
    int n = g.vertex_count();

    // pin the outer cycle on a circle, highest vertex first
    std::vector<double> px(n, 0.0), py(n, 0.0);
    std::vector<char> pinned(n, 0);
    std::vector<VertexId> ring;
    for (DartId d : g.face(g.outer_face()).boundary) ring.push_back(g.dart(d).tail);
    for (size_t i = 0; i < ring.size(); ++i) {
        double ang = 2.0 * M_PI * (double)i / (double)ring.size() - M_PI / 2;
        px[ring[i]] = cx + radius * std::cos(ang);
        py[ring[i]] = cy + radius * std::sin(ang);
        pinned[ring[i]] = 1;
    }

    std::vector<int> idx(n, -1);
    std::vector<VertexId> inner;
    for (VertexId v = 0; v < n; ++v)
        if (!pinned[v]) {
            idx[v] = (int)inner.size();
            inner.push_back(v);
        }

    if (!inner.empty()) {
        int m = (int)inner.size();
        std::vector<Eigen::Triplet<double>> trip;
        Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
        for (int i = 0; i < m; ++i) {
            VertexId v = inner[i];
            trip.emplace_back(i, i, (double)g.degree(v));
            for (VertexId u : g.rotation(v)) {
                if (pinned[u]) {
                    bx[i] += px[u];
                    by[i] += py[u];
                } else {
                    trip.emplace_back(i, idx[u], -1.0);
                }
            }
        }
        Eigen::SparseMatrix<double> lap(m, m);
        lap.setFromTriplets(trip.begin(), trip.end());
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
        Eigen::VectorXd sx = solver.solve(bx), sy = solver.solve(by);
        for (int i = 0; i < m; ++i) {
            px[inner[i]] = sx[i];
            py[inner[i]] = sy[i];
        }
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << (int)size << " "
        << (int)size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // plain edges below, guard edges above
    for (int pass = 0; pass < 2; ++pass) {
        for (const VertexPair& e : g.edge_pairs()) {
            bool gd = is_guard(guards, e.a, e.b);
            if ((int)gd != pass) continue;
            out << "<line x1=\"" << fmt(px[e.a]) << "\" y1=\"" << fmt(py[e.a]) << "\" x2=\""
                << fmt(px[e.b]) << "\" y2=\"" << fmt(py[e.b]) << "\" stroke=\""
                << (gd ? "#d62728" : "#888888") << "\" stroke-width=\"" << (gd ? "4" : "1.5")
                << "\"/>\n";
        }
    }
    bool labels = n <= 64;
    for (VertexId v = 0; v < n; ++v) {
        out << "<circle cx=\"" << fmt(px[v]) << "\" cy=\"" << fmt(py[v]) << "\" r=\""
            << (labels ? "9" : "2.5") << "\" fill=\""
            << (guards && guards->contains_vertex(v) ? "#ffd9d9" : "#e8f0fe")
            << "\" stroke=\"#333333\"/>\n";
        if (labels)
            out << "<text x=\"" << fmt(px[v]) << "\" y=\"" << fmt(py[v] + 3.5)
                << "\" font-size=\"10\" text-anchor=\"middle\" font-family=\"sans-serif\">" << v
                << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace planeguard
