#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fairenum/random.hpp"
#include "fairenum/solution.hpp"

namespace fairenum {

// Raised by samplers that cannot produce a feasible solution (for instance a
// rejection sampler that ran out of redraws).
class SamplerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Source of independent, identically distributed feasible solutions.
//
// Implementations are seeded at construction and must replay the same draw
// sequence for the same seed. The enumerators assume, without checking, that
// the distribution is fair (equal-cost solutions equiprobable) and, for the
// optimization enumerator, cost-ordered (cheaper solutions at least as
// probable as costlier ones).
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual Solution draw() = 0;
};

// Categorical distribution over an explicit list of solutions.
class FiniteSampler final : public Sampler {
 public:
  FiniteSampler(std::vector<Solution> support, std::vector<double> weights,
                std::uint64_t seed);

  static FiniteSampler uniform(std::vector<Solution> support, std::uint64_t seed);
  // Weights exp(-beta * (cost - min cost)); equal costs get equal mass.
  static FiniteSampler boltzmann(std::vector<Solution> support, double beta,
                                 std::uint64_t seed);

  Solution draw() override;
  std::size_t draw_index();

  const std::vector<Solution>& support() const { return support_; }

 private:
  std::vector<Solution> support_;
  std::vector<double> cumulative_;
  Rng rng_;
};

// n solutions with one-hot keys of width n, all of the given cost.
std::vector<Solution> one_hot_solutions(std::size_t n, double cost = 0.0);

// Pass-through decorator that tallies every draw by key.
class CountingSampler final : public Sampler {
 public:
  explicit CountingSampler(Sampler& inner) : inner_(inner) {}

  Solution draw() override;

  const std::unordered_map<SolutionKey, std::uint64_t, SolutionKeyHash>& counts() const {
    return counts_;
  }
  std::uint64_t total() const { return total_; }

 private:
  Sampler& inner_;
  std::unordered_map<SolutionKey, std::uint64_t, SolutionKeyHash> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace fairenum
