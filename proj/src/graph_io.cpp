#include "planeguard/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace planeguard {

namespace {

[[noreturn]] void fail_at(int line, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        fail_at(line, "expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace

std::string serialize_pg1(const PlaneGraph& g) {
    std::ostringstream out;
    out << "PG1 " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = g.rotation(v);
        int start = (int)(std::min_element(rot.begin(), rot.end()) - rot.begin());
        out << rot.size();
        for (int i = 0; i < (int)rot.size(); ++i)
            out << ' ' << rot[(start + i) % rot.size()];
        out << '\n';
    }
    auto [u, v] = g.outer_pair();
    out << "OUTER " << u << ' ' << v << '\n';
    return out.str();
}

PlaneGraph parse_pg1(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) fail_at(1, "empty document");
    auto header = tokens_of(lines[0]);
    if (header.size() != 3 || header[0] != "PG1")
        fail_at(1, "expected header 'PG1 <n> <m>'");
    int n = parse_int(header[1], 1);
    int m = parse_int(header[2], 1);
    if (n < 1) fail_at(1, "vertex count must be positive");
    if ((int)lines.size() != n + 2) fail_at((int)lines.size(), "expected " + std::to_string(n + 2) + " lines");

    std::vector<std::vector<VertexId>> rotations(n);
    long degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        int line = v + 2;
        auto toks = tokens_of(lines[v + 1]);
        if (toks.empty()) fail_at(line, "expected '<deg> <neighbors...>'");
        int deg = parse_int(toks[0], line);
        if ((int)toks.size() != deg + 1)
            fail_at(line, "degree " + std::to_string(deg) + " but " +
                              std::to_string(toks.size() - 1) + " neighbors listed");
        for (int i = 1; i <= deg; ++i) {
            int w = parse_int(toks[i], line);
            if (w < 0 || w >= n) fail_at(line, "neighbor id " + std::to_string(w) + " out of range");
            rotations[v].push_back(w);
        }
        degree_sum += deg;
    }
    if (degree_sum != 2L * m) fail_at(1, "edge count " + std::to_string(m) + " does not match rotations");

    int outer_line = n + 2;
    auto toks = tokens_of(lines[n + 1]);
    if (toks.size() != 3 || toks[0] != "OUTER") fail_at(outer_line, "expected 'OUTER <u> <v>'");
    int ou = parse_int(toks[1], outer_line);
    int ov = parse_int(toks[2], outer_line);
    if (ou < 0 || ou >= n || ov < 0 || ov >= n) fail_at(outer_line, "OUTER vertex id out of range");
    if (std::find(rotations[ou].begin(), rotations[ou].end(), ov) == rotations[ou].end())
        fail_at(outer_line, "OUTER pair " + std::to_string(ou) + " " + std::to_string(ov) +
                                " is not an edge");
    return PlaneGraph::build(n, rotations, {ou, ov});
}

std::string serialize_guards(const EdgeGuardSet& s) {
    std::ostringstream out;
    out << "GUARDS " << s.size() << '\n';
    for (const auto& e : s.edges) out << e.a << ' ' << e.b << '\n';  // set order is lexicographic
    return out.str();
}

EdgeGuardSet parse_guards(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) fail_at(1, "empty document");
    auto header = tokens_of(lines[0]);
    if (header.size() != 2 || header[0] != "GUARDS")
        fail_at(1, "expected header 'GUARDS <count>'");
    int count = parse_int(header[1], 1);
    if (count < 0) fail_at(1, "negative guard count");
    if ((int)lines.size() != count + 1)
        fail_at((int)lines.size(), "expected " + std::to_string(count + 1) + " lines");
    EdgeGuardSet s;
    VertexPair prev;
    for (int i = 0; i < count; ++i) {
        int line = i + 2;
        auto toks = tokens_of(lines[i + 1]);
        if (toks.size() != 2) fail_at(line, "expected '<u> <v>'");
        int u = parse_int(toks[0], line);
        int v = parse_int(toks[1], line);
        if (u < 0 || v < 0) fail_at(line, "negative vertex id");
        if (u >= v) fail_at(line, "expected u < v");
        VertexPair p(u, v);
        if (i > 0 && !(prev < p)) fail_at(line, "guards not sorted");
        s.edges.insert(p);
        prev = p;
    }
    return s;
}

}  // namespace planeguard
