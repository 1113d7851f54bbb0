#pragma once

#include <string>

#include "planeguard/plane_graph.hpp"

namespace planeguard {

// PG1 text format:
//   PG1 <n> <m>
//   <deg_i> <neighbors of vertex i, clockwise>     (n lines)
//   OUTER <u> <v>
// Serialization is canonical: each rotation is emitted starting at the
// lowest neighbor id, so serialize(parse(s)) == s for canonical s and two
// graphs are equal iff their serializations match byte for byte.
std::string serialize_pg1(const PlaneGraph& g);
PlaneGraph parse_pg1(const std::string& text);  // throws with a line number

// GUARDS text format:
//   GUARDS <g>
//   <u> <v>    (u < v, rows sorted lexicographically)
std::string serialize_guards(const EdgeGuardSet& s);
EdgeGuardSet parse_guards(const std::string& text);

}  // namespace planeguard
