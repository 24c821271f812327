#include "fairenum/maxclique.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairenum::clique {

ising::QuboModel max_clique_qubo(const Graph& g, double penalty) {
  if (!(penalty > 1.0)) {
    throw std::invalid_argument("max_clique_qubo: penalty must exceed 1");
  }
  ising::QuboModel q(g.n_vertices());
  for (std::size_t v = 0; v < g.n_vertices(); ++v) q.add_linear(v, -1.0);
  for (const auto& [u, v] : g.non_edges()) q.add_quadratic(u, v, penalty);
  return q;
}

namespace {

struct OutOfTime {};

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, std::optional<std::chrono::steady_clock::time_point> stop_at)
      : g_(g), stop_at_(stop_at) {}

  std::vector<VertexSet> run() {
    const std::size_t n = g_.n_vertices();
    Bits p(n);
    p.set();
    Bits x(n);
    std::vector<std::uint32_t> r;
    expand(r, p, x);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void expand(std::vector<std::uint32_t>& r, Bits p, Bits x) {
    if (stop_at_ && (++nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > *stop_at_) {
      throw OutOfTime{};
    }
    if (r.size() + p.count() < best_) return;
    if (p.none()) {
      if (x.none()) record(r);
      return;
    }

    // Tomita pivot: the vertex of P u X with the most neighbours in P.
    std::size_t pivot = Bits::npos;
    std::size_t pivot_hits = 0;
    for (const Bits* side : {&p, &x}) {
      for (auto u = side->find_first(); u != Bits::npos; u = side->find_next(u)) {
        const std::size_t hits = (p & g_.neighbors(u)).count();
        if (pivot == Bits::npos || hits > pivot_hits) {
          pivot = u;
          pivot_hits = hits;
        }
      }
    }

    Bits candidates = p - g_.neighbors(pivot);
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      if (r.size() + p.count() < best_) return;
      const Bits& nv = g_.neighbors(v);
      r.push_back(static_cast<std::uint32_t>(v));
      expand(r, p & nv, x & nv);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  void record(const std::vector<std::uint32_t>& r) {
    if (r.size() > best_) {
      best_ = r.size();
      found_.clear();
    }
    if (r.size() == best_) found_.emplace_back(r);
  }

  const Graph& g_;
  std::optional<std::chrono::steady_clock::time_point> stop_at_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<VertexSet> found_;
};

}  // namespace

std::vector<VertexSet> enumerate_max_cliques_exact(const Graph& g) {
  return MaxCliqueSearch(g, std::nullopt).run();
}

std::optional<std::vector<VertexSet>> enumerate_max_cliques_exact(
    const Graph& g, std::chrono::duration<double> budget) {
  const auto stop_at =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
  try {
    return MaxCliqueSearch(g, stop_at).run();
  } catch (const OutOfTime&) {
    return std::nullopt;
  }
}

CliqueSampler::CliqueSampler(const Graph& g, double penalty,
                             const ising::AnnealSchedule& schedule, std::uint64_t seed,
                             std::uint64_t max_redraws)
    : graph_(g),
      annealer_(ising::qubo_to_ising(max_clique_qubo(g, penalty)), schedule),
      rng_(make_rng(seed)),
      max_redraws_(max_redraws) {}

Solution CliqueSampler::draw() {
  for (std::uint64_t attempt = 0;; ++attempt) {
    if (max_redraws_ != 0 && attempt > max_redraws_) {
      throw SamplerError("clique sampler: no feasible sample within " +
                         std::to_string(max_redraws_) + " redraws");
    }
    ++anneals_;
    SolutionKey key = ising::spins_to_bits(annealer_.anneal(rng_));
    if (is_clique(graph_, key)) {
      const double cost = -static_cast<double>(key.count());
      return {std::move(key), cost};
    }
    ++rejected_;
  }
}

CliqueSampler make_clique_sampler(const Graph& g, double penalty,
                                  const ising::AnnealSchedule& schedule, std::uint64_t seed) {
  return CliqueSampler(g, penalty, schedule, seed);
}

}  // namespace fairenum::clique
