#include "fairenum/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fairenum/random.hpp"

namespace fairenum::clique {

Graph::Graph(std::size_t n_vertices) : rows_(n_vertices, Bits(n_vertices)) {
  if (n_vertices == 0) throw std::invalid_argument("Graph: at least one vertex required");
}

double Graph::density() const {
  const double n = static_cast<double>(n_vertices());
  if (n < 2) return 0.0;
  return static_cast<double>(n_edges_) / (n * (n - 1) / 2.0);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_vertices() || v >= n_vertices()) {
    throw std::out_of_range("Graph::add_edge: vertex out of range");
  }
  if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++n_edges_;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  if (u >= n_vertices() || v >= n_vertices()) {
    throw std::out_of_range("Graph::adjacent: vertex out of range");
  }
  return rows_[u].test(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(n_edges_);
  for (std::size_t u = 0; u < n_vertices(); ++u) {
    for (auto v = rows_[u].find_next(u); v != Bits::npos; v = rows_[u].find_next(v)) {
      out.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n_vertices(); ++u) {
    for (std::size_t v = u + 1; v < n_vertices(); ++v) {
      if (!rows_[u].test(v)) {
        out.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
      }
    }
  }
  return out;
}

VertexSet::VertexSet(std::vector<std::uint32_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_key(const SolutionKey& key) {
  std::vector<std::uint32_t> m;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key.test(i)) m.push_back(static_cast<std::uint32_t>(i));
  }
  return VertexSet(std::move(m));
}

VertexSet VertexSet::from_bits(const Bits& bits) {
  std::vector<std::uint32_t> m;
  for (auto v = bits.find_first(); v != Bits::npos; v = bits.find_next(v)) {
    m.push_back(static_cast<std::uint32_t>(v));
  }
  return VertexSet(std::move(m));
}

SolutionKey VertexSet::to_key(std::size_t n_vertices) const {
  SolutionKey key(n_vertices);
  for (auto v : members_) key.set(v);
  return key;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const auto& m = s.members();
  for (auto v : m) {
    if (v >= g.n_vertices()) throw std::out_of_range("is_clique: vertex out of range");
  }
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (!g.neighbors(m[a]).test(m[b])) return false;
    }
  }
  return true;
}

bool is_clique(const Graph& g, const SolutionKey& x) {
  if (x.size() != g.n_vertices()) {
    throw std::out_of_range("is_clique: key length differs from vertex count");
  }
  return is_clique(g, VertexSet::from_key(x));
}

std::size_t target_edge_count(std::size_t n, double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  // Half up, with a small guard so products like 4.4999999999 that are 4.5 in
  // exact arithmetic still round up.
  const auto count = static_cast<std::size_t>(std::floor(pairs * density + 0.5 + 1e-9));
  return std::min(count, static_cast<std::size_t>(pairs));
}

Graph erdos_renyi(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("erdos_renyi: n must be positive");
  const std::size_t m = target_edge_count(n, density);

  std::vector<Edge> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  // Partial Fisher-Yates: the first m slots become a uniform m-subset.
  Rng rng = make_rng(seed);
  Graph g(n);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t pick = k + uniform_index(rng, pairs.size() - k);
    std::swap(pairs[k], pairs[pick]);
    g.add_edge(pairs[k].first, pairs[k].second);
  }
  return g;
}

}  // namespace fairenum::clique
