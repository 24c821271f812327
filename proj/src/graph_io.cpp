#include "fairenum/graph_io.hpp"

#include <optional>

#include "fairenum/errors.hpp"
#include "text_util.hpp"

namespace fairenum::io {

clique::Graph parse_graph(std::string_view text) {
  std::optional<clique::Graph> g;

  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (g) throw ParseError(line_no, "duplicate 'p' line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError(line_no, "header must be 'p edge <n> <m>'");
      }
      auto n = detail::parse_number<std::size_t>(tokens[2]);
      auto m = detail::parse_number<std::size_t>(tokens[3]);
      if (!n || *n == 0 || !m) throw ParseError(line_no, "invalid vertex or edge count");
      g.emplace(*n);
      return;
    }
    if (tokens[0] == "e") {
      if (!g) throw ParseError(line_no, "edge line before 'p' header");
      if (tokens.size() != 3) throw ParseError(line_no, "edge line must be 'e <u> <v>'");
      auto u = detail::parse_number<std::size_t>(tokens[1]);
      auto v = detail::parse_number<std::size_t>(tokens[2]);
      if (!u || !v) throw ParseError(line_no, "vertices must be positive integers");
      if (*u == 0 || *v == 0 || *u > g->n_vertices() || *v > g->n_vertices()) {
        throw ParseError(line_no, "vertex out of range");
      }
      if (*u == *v) throw ParseError(line_no, "self-loop");
      g->add_edge(*u - 1, *v - 1);
      return;
    }
    throw ParseError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
  });

  if (!g) throw ParseError(0, "missing 'p edge <n> <m>' header");
  return std::move(*g);
}

std::string write_graph(const clique::Graph& g) {
  std::string out = "p edge " + std::to_string(g.n_vertices()) + " " +
                    std::to_string(g.n_edges()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

}  // namespace fairenum::io
