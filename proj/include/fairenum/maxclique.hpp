#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairenum/graph.hpp"
#include "fairenum/ising.hpp"
#include "fairenum/sampler.hpp"

namespace fairenum::clique {

inline constexpr double kDefaultPenalty = 2.0;

// -sum_v x_v + penalty * sum_{nonadjacent u<v} x_u x_v. For penalty > 1 the
// minimizers are exactly the maximum cliques. Throws std::invalid_argument
// when penalty <= 1.
ising::QuboModel max_clique_qubo(const Graph& g, double penalty = kDefaultPenalty);

// All maximum-cardinality cliques, sorted. Bron-Kerbosch with Tomita pivoting
// and a Carraghan-Pardalos size bound against the incumbent.
std::vector<VertexSet> enumerate_max_cliques_exact(const Graph& g);

// Same, giving up (nullopt) once the wall-clock budget is spent.
std::optional<std::vector<VertexSet>> enumerate_max_cliques_exact(
    const Graph& g, std::chrono::duration<double> budget);

// Feasible-solution sampler for the clique problem: anneals the Ising image
// of max_clique_qubo, discards non-cliques and redraws. Yields
// Solution{key = membership bits, cost = -clique size}.
class CliqueSampler final : public Sampler {
 public:
  // max_redraws == 0 means unlimited; otherwise a draw that needs more than
  // max_redraws consecutive rejections throws SamplerError.
  CliqueSampler(const Graph& g, double penalty, const ising::AnnealSchedule& schedule,
                std::uint64_t seed, std::uint64_t max_redraws = 0);

  Solution draw() override;

  std::uint64_t anneals() const { return anneals_; }
  std::uint64_t rejected() const { return rejected_; }

 private:
  const Graph& graph_;
  ising::Annealer annealer_;
  Rng rng_;
  std::uint64_t max_redraws_;
  std::uint64_t anneals_ = 0;
  std::uint64_t rejected_ = 0;
};

CliqueSampler make_clique_sampler(const Graph& g, double penalty,
                                  const ising::AnnealSchedule& schedule, std::uint64_t seed);

}  // namespace fairenum::clique
