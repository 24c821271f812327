#include "fairenum/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fairenum {

FiniteSampler::FiniteSampler(std::vector<Solution> support, std::vector<double> weights,
                             std::uint64_t seed)
    : support_(std::move(support)), rng_(make_rng(seed)) {
  if (support_.empty()) throw std::invalid_argument("FiniteSampler: empty support");
  if (weights.size() != support_.size()) {
    throw std::invalid_argument("FiniteSampler: weight count differs from support size");
  }
  cumulative_.reserve(weights.size());
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("FiniteSampler: weights must be finite and nonnegative");
    }
    total += w;
    cumulative_.push_back(total);
  }
  if (!(total > 0.0)) throw std::invalid_argument("FiniteSampler: zero total weight");
  for (auto& c : cumulative_) c /= total;
  cumulative_.back() = 1.0;
}

FiniteSampler FiniteSampler::uniform(std::vector<Solution> support, std::uint64_t seed) {
  std::vector<double> w(support.size(), 1.0);
  return FiniteSampler(std::move(support), std::move(w), seed);
}

FiniteSampler FiniteSampler::boltzmann(std::vector<Solution> support, double beta,
                                       std::uint64_t seed) {
  if (support.empty()) throw std::invalid_argument("FiniteSampler: empty support");
  double lowest = support.front().cost;
  for (const auto& s : support) lowest = std::min(lowest, s.cost);
  std::vector<double> w;
  w.reserve(support.size());
  for (const auto& s : support) w.push_back(std::exp(-beta * (s.cost - lowest)));
  return FiniteSampler(std::move(support), std::move(w), seed);
}

std::size_t FiniteSampler::draw_index() {
  const double u = uniform_unit(rng_);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<std::size_t>(std::min<std::ptrdiff_t>(
      it - cumulative_.begin(), static_cast<std::ptrdiff_t>(cumulative_.size()) - 1));
}

Solution FiniteSampler::draw() { return support_[draw_index()]; }

std::vector<Solution> one_hot_solutions(std::size_t n, double cost) {
  std::vector<Solution> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SolutionKey key(n);
    key.set(i);
    out.push_back({std::move(key), cost});
  }
  return out;
}

Solution CountingSampler::draw() {
  Solution s = inner_.draw();
  ++counts_[s.key];
  ++total_;
  return s;
}

}  // namespace fairenum
