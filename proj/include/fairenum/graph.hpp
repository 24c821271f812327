#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fairenum/solution.hpp"

namespace fairenum::clique {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<std::uint32_t, std::uint32_t>;  // first < second

// Undirected simple graph with dense bitset adjacency rows.
class Graph {
 public:
  explicit Graph(std::size_t n_vertices);

  std::size_t n_vertices() const { return rows_.size(); }
  std::size_t n_edges() const { return n_edges_; }
  // edges / C(n, 2); 0 for graphs with fewer than two vertices.
  double density() const;

  // Idempotent. Throws std::out_of_range / std::invalid_argument on bad
  // indices or self-loops.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  const Bits& neighbors(std::size_t v) const { return rows_[v]; }

  std::vector<Edge> edges() const;
  // Nonadjacent vertex pairs (the complement edge set).
  std::vector<Edge> non_edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bits> rows_;
  std::size_t n_edges_ = 0;
};

// A subset of vertices, kept sorted and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<std::uint32_t> members);

  static VertexSet from_key(const SolutionKey& key);
  static VertexSet from_bits(const Bits& bits);
  SolutionKey to_key(std::size_t n_vertices) const;

  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint32_t> members_;
};

// True iff every pair of members is adjacent. Throws std::out_of_range for
// members outside the graph.
bool is_clique(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const SolutionKey& x);

// round_half_up(C(n, 2) * density) edges drawn uniformly without replacement.
Graph erdos_renyi(std::size_t n, double density, std::uint64_t seed);
std::size_t target_edge_count(std::size_t n, double density);

}  // namespace fairenum::clique
