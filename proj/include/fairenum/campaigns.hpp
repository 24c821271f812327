#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairenum/sampler.hpp"
#include "fairenum/stats.hpp"

namespace fairenum::campaigns {

// Explicit cost landscape with a known set of optimal solutions.
struct Landscape {
  std::string name;
  std::vector<Solution> solutions;  // optima have cost 0
  std::size_t n_optimal = 0;
};

// n_optimal solutions of cost 0 followed by n_suboptimal with costs cycling
// through 1, 2, 3. Keys are one-hot of width n_optimal + n_suboptimal.
Landscape make_landscape(std::size_t n_optimal, std::size_t n_suboptimal);

enum class Distribution { uniform, boltzmann };
std::string to_string(Distribution d);

struct GuaranteeCheck {
  std::string label;
  double epsilon = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double failure_rate = 0.0;
  double standard_error = 0.0;  // of the failure-rate estimate
  bool below_epsilon = false;   // failure_rate < epsilon
};

// enumerate_csp against a uniform sampler over n items; a trial fails when
// fewer than n items are returned.
GuaranteeCheck csp_failure_mc(std::size_t n, double epsilon, std::uint64_t trials,
                         std::uint64_t seed);

// enumerate_opt against a cost-ordered fair sampler over the landscape; a
// trial fails unless exactly the optimal set is returned. The Boltzmann
// variant uses inverse temperature boltzmann_beta.
GuaranteeCheck opt_failure_mc(const Landscape& landscape, Distribution distribution,
                         double epsilon, std::uint64_t trials, std::uint64_t seed,
                         double boltzmann_beta = 1.0);

struct CampaignConfig {
  std::uint64_t seed = 0;
  std::uint64_t coupon_trials = 100000;
  std::uint64_t guarantee_trials = 20000;
  std::vector<std::uint64_t> complete_n{2, 5, 10};
  std::vector<double> complete_epsilon{0.05, 0.1};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> partial_nm{{10, 5}, {10, 8}, {20, 10}};
  double partial_epsilon = 0.1;
  std::uint64_t csp_max_n = 10;
  double guarantee_epsilon = 0.05;
  unsigned threads = 1;
};

struct BoundsReport {
  std::vector<stats::TailCheck> complete_collection;
  std::vector<stats::TailCheck> partial_collection;
  std::vector<GuaranteeCheck> csp;
  std::vector<GuaranteeCheck> opt;
  bool all_pass = false;
};

BoundsReport validate_bounds(const CampaignConfig& config);

}  // namespace fairenum::campaigns
