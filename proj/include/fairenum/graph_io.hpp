#pragma once

#include <string>
#include <string_view>

#include "fairenum/graph.hpp"

namespace fairenum::io {

// DIMACS edge format:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        1-based vertices
// Duplicate edges collapse to one; the declared m is informational. Throws
// ParseError on a malformed header, out-of-range vertex, or self-loop.
clique::Graph parse_graph(std::string_view text);

std::string write_graph(const clique::Graph& g);

}  // namespace fairenum::io
