#include <cmath>
#include <limits>

#include "doctest.h"
#include "fairenum/errors.hpp"
#include "fairenum/graph.hpp"
#include "fairenum/graph_io.hpp"
#include "fairenum/model_io.hpp"
#include "fairenum/random.hpp"

using namespace fairenum;
using namespace fairenum::io;

TEST_CASE("parse DIMACS graphs") {
  auto g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.n_vertices() == 3);
  CHECK(g.n_edges() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));

  g = parse_graph("p edge 4 0\n");
  CHECK(g.n_vertices() == 4);
  CHECK(g.n_edges() == 0);

  g = parse_graph("c duplicate edges\np edge 3 3\ne 1 2\ne 1 2\ne 2 1\n");
  CHECK(g.n_edges() == 1);

  g = parse_graph("c comment\n\np col 2 1\n  e 1 2  \r\n");
  CHECK(g.n_edges() == 1);
}

TEST_CASE("malformed DIMACS input") {
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge x 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p graph 3 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 2 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\nx 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\np edge 3 1\n"), ParseError);
  try {
    parse_graph("p edge 3 1\ne 1 2\ne 3 3\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).starts_with("line 3:"));
  }
}

TEST_CASE("graph round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = clique::erdos_renyi(5 + seed, 0.4, seed);
    CHECK(parse_graph(write_graph(g)) == g);
  }
}

TEST_CASE("model text format") {
  const auto m = read_model("# qubo 3\n# offset 1.5\n0 0 -1\n0 2 2\n2 0 0.5\n# a comment\n1 1 +3\n");
  REQUIRE(std::holds_alternative<ising::QuboModel>(m));
  const auto& q = std::get<ising::QuboModel>(m);
  CHECK(q.n_vars() == 3);
  CHECK(q.offset() == 1.5);
  CHECK(q.linear() == std::vector<double>{-1.0, 3.0, 0.0});
  CHECK(q.quadratic().at({0, 2}) == 2.5);

  const auto is = read_ising("# ising 2\n0 1 -1\n1 1 0.25\n");
  CHECK(is.couplings().at({0, 1}) == -1.0);
  CHECK(is.fields()[1] == 0.25);
  CHECK(is.offset() == 0.0);

  CHECK_THROWS_AS(read_qubo("# ising 2\n"), ParseError);
  CHECK_THROWS_AS(read_ising("# qubo 2\n"), ParseError);
  CHECK_THROWS_AS(read_model("0 0 1\n"), ParseError);
  CHECK_THROWS_AS(read_model(""), ParseError);
  CHECK_THROWS_AS(read_model("# qubo 0\n"), ParseError);
  CHECK_THROWS_AS(read_model("# qubo 2\n0 2 1\n"), ParseError);
  CHECK_THROWS_AS(read_model("# qubo 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(read_model("# qubo 2\n0 1 abc\n"), ParseError);
  CHECK_THROWS_AS(read_model("# qubo 2\n0 1 nan\n"), ParseError);
  CHECK_THROWS_AS(read_model("# qubo 2\n# qubo 2\n"), ParseError);
}

TEST_CASE("model round trip is exact") {
  Rng rng = make_rng(8);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + uniform_index(rng, 12);
    ising::QuboModel q(n);
    ising::IsingModel is(n);
    for (std::size_t i = 0; i < n; ++i) {
      q.add_linear(i, uniform_unit(rng) * 1e3 - 500.0);
      is.add_field(i, std::ldexp(uniform_unit(rng), -40));
      for (std::size_t j = i + 1; j < n; ++j) {
        q.add_quadratic(i, j, uniform_unit(rng) - 0.5);
        is.add_coupling(i, j, 1.0 / 3.0 * static_cast<double>(j));
      }
    }
    q.add_offset(0.1);
    is.add_offset(-std::numeric_limits<double>::min());
    CHECK(read_qubo(write_model(q)) == q);
    CHECK(read_ising(write_model(is)) == is);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.0) == "-2");
}
