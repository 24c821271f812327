#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fairenum/solution.hpp"

namespace fairenum::stats {

// Chi-squared goodness of fit against the uniform distribution.
struct FairnessReport {
  std::vector<std::uint64_t> counts;
  double chi2 = 0.0;
  double p_value = 1.0;
  // max/min empirical frequency; nullopt when some category was never seen
  // (the ratio is then unbounded).
  std::optional<double> pmax_over_pmin;
};

// Throws std::invalid_argument for fewer than two categories or a zero total.
FairnessReport chi_squared_uniform_test(std::span<const std::uint64_t> counts);

// Upper tail of the chi-squared distribution with `dof` degrees of freedom.
double chi_squared_sf(double x, double dof);

// P(X <= successes) for X ~ Binomial(runs, p0), exact.
double binomial_tail_p(std::uint64_t successes, std::uint64_t runs, double p0);

// Exact (Clopper-Pearson) two-sided interval at the given confidence level.
std::pair<double, double> clopper_pearson_ci(std::uint64_t successes, std::uint64_t runs,
                                             double level);

// |found & truth| / |truth|. Throws std::invalid_argument for empty truth.
double solution_coverage(std::span<const Solution> found, std::span<const Solution> truth);

struct TrialSummary {
  std::uint64_t successes = 0;
  std::uint64_t runs = 0;
  double p_value_vs_target = 1.0;  // binomial_tail_p(successes, runs, target)
  double ci_low = 0.0;
  double ci_high = 1.0;
  double mean_coverage = 0.0;
  // p < 0.05 or the 95% interval excludes the target.
  bool incompatible = false;
};

TrialSummary summarize_trials(std::uint64_t successes, std::uint64_t runs,
                              double mean_coverage, double target = 0.99);

// Monte Carlo estimate of P(T_m > ceil(m ln(m/eps))) where T_m is the number
// of uniform draws from n items needed to see m distinct ones.
struct TailCheck {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double epsilon = 0.0;
  std::uint64_t deadline_used = 0;
  std::uint64_t trials = 0;
  std::uint64_t exceedances = 0;
  double empirical_tail = 0.0;
  double bound = 0.0;
  double standard_error = 0.0;  // binomial standard error at the bound
  bool within_bound = false;    // empirical_tail <= bound + 3 standard errors
};

// Complete collection (m = n); the bound is epsilon.
TailCheck complete_collection_mc(std::uint64_t n, double epsilon, std::uint64_t trials,
                           std::uint64_t seed);

// Partial collection; the bound is (m/n)^(d+1) C(n,m) epsilon with d the
// deadline. Requires 1 <= m <= n and 0 < epsilon < 1.
TailCheck tail_bound_mc(std::uint64_t n, std::uint64_t m, double epsilon,
                        std::uint64_t trials, std::uint64_t seed);

// Expected time for a successful run: sample_budget(n, eps, kappa) *
// t_sample / p_desirable.
double expected_time_estimate(std::uint64_t n, double epsilon, double kappa, double t_sample,
                              double p_desirable);

// Least-squares fit of log(y) = a + b x; reports y ~ e^a * base^x.
struct ExponentialFit {
  double base = 1.0;
  double prefactor = 1.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

// Nonpositive y values are skipped. Throws std::invalid_argument with fewer
// than two usable points or a degenerate x range.
ExponentialFit fit_exponential(std::span<const double> x, std::span<const double> y);

}  // namespace fairenum::stats
