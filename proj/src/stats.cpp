#include "fairenum/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "fairenum/bounds.hpp"
#include "fairenum/random.hpp"

namespace fairenum::stats {

double chi_squared_sf(double x, double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("chi_squared_sf: dof must be positive");
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

FairnessReport chi_squared_uniform_test(std::span<const std::uint64_t> counts) {
  if (counts.size() < 2) {
    throw std::invalid_argument("chi-squared test needs at least two categories");
  }
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (!(total > 0.0)) throw std::invalid_argument("chi-squared test needs a positive total");

  FairnessReport r;
  r.counts.assign(counts.begin(), counts.end());
  const double expected = total / static_cast<double>(counts.size());
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    r.chi2 += d * d / expected;
  }
  r.p_value = std::clamp(chi_squared_sf(r.chi2, static_cast<double>(counts.size() - 1)), 0.0, 1.0);

  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  if (*lo > 0) r.pmax_over_pmin = static_cast<double>(*hi) / static_cast<double>(*lo);
  return r;
}

double binomial_tail_p(std::uint64_t successes, std::uint64_t runs, double p0) {
  if (successes > runs) throw std::invalid_argument("binomial_tail_p: successes > runs");
  if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("binomial_tail_p: p0 must lie in (0, 1)");
  if (successes == runs) return 1.0;

  // log pmf via the ratio recurrence pmf(k+1)/pmf(k) = (n-k)/(k+1) * p/(1-p).
  const std::uint64_t n = runs;
  std::vector<double> log_pmf(n + 1);
  log_pmf[0] = static_cast<double>(n) * std::log1p(-p0);
  const double log_odds = std::log(p0) - std::log1p(-p0);
  for (std::uint64_t k = 0; k < n; ++k) {
    log_pmf[k + 1] = log_pmf[k] + std::log(static_cast<double>(n - k)) -
                     std::log(static_cast<double>(k + 1)) + log_odds;
  }
  const double peak = *std::max_element(log_pmf.begin(), log_pmf.end());
  double lower = 0.0;
  double upper = 0.0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const double w = std::exp(log_pmf[k] - peak);
    (k <= successes ? lower : upper) += w;
  }
  return lower / (lower + upper);
}

std::pair<double, double> clopper_pearson_ci(std::uint64_t successes, std::uint64_t runs,
                                             double level) {
  if (runs == 0 || successes > runs) {
    throw std::invalid_argument("clopper_pearson_ci: need 0 <= successes <= runs, runs > 0");
  }
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("clopper_pearson_ci: level must lie in (0, 1)");
  }
  const double alpha = 1.0 - level;
  const double s = static_cast<double>(successes);
  const double f = static_cast<double>(runs - successes);
  const double low = successes == 0 ? 0.0 : boost::math::ibeta_inv(s, f + 1.0, alpha / 2.0);
  const double high =
      successes == runs ? 1.0 : boost::math::ibeta_inv(s + 1.0, f, 1.0 - alpha / 2.0);
  return {low, high};
}

double solution_coverage(std::span<const Solution> found, std::span<const Solution> truth) {
  if (truth.empty()) throw std::invalid_argument("solution_coverage: empty truth set");
  std::unordered_set<SolutionKey, SolutionKeyHash> truth_keys;
  for (const auto& s : truth) truth_keys.insert(s.key);
  std::unordered_set<SolutionKey, SolutionKeyHash> hit;
  for (const auto& s : found) {
    if (truth_keys.contains(s.key)) hit.insert(s.key);
  }
  return static_cast<double>(hit.size()) / static_cast<double>(truth_keys.size());
}

TrialSummary summarize_trials(std::uint64_t successes, std::uint64_t runs, double mean_coverage,
                              double target) {
  TrialSummary t;
  t.successes = successes;
  t.runs = runs;
  t.mean_coverage = mean_coverage;
  t.p_value_vs_target = binomial_tail_p(successes, runs, target);
  std::tie(t.ci_low, t.ci_high) = clopper_pearson_ci(successes, runs, 0.95);
  t.incompatible = t.p_value_vs_target < 0.05 || target < t.ci_low || target > t.ci_high;
  return t;
}

namespace {

std::uint64_t coupon_deadline(std::uint64_t m, double epsilon) {
  const double md = static_cast<double>(m);
  return bounds::guarded_ceil(md * std::log(md / epsilon));
}

double log_choose(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

// Trials are split into fixed-size chunks with counter-derived seeds, so the
// estimate does not depend on how chunks are scheduled.
constexpr std::uint64_t kChunk = 4096;

std::uint64_t count_exceedances(std::uint64_t n, std::uint64_t m, std::uint64_t deadline,
                                std::uint64_t trials, std::uint64_t seed) {
  std::vector<std::uint64_t> stamp(n, 0);
  std::uint64_t generation = 0;
  std::uint64_t exceed = 0;
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    Rng rng = make_rng(derive_seed(seed, 0xC0C0, c));
    const std::uint64_t in_chunk = std::min(kChunk, trials - c * kChunk);
    for (std::uint64_t t = 0; t < in_chunk; ++t) {
      ++generation;
      std::uint64_t distinct = 0;
      std::uint64_t draws = 0;
      while (distinct < m && draws <= deadline) {
        const auto item = uniform_index(rng, n);
        ++draws;
        if (stamp[item] != generation) {
          stamp[item] = generation;
          ++distinct;
        }
      }
      if (draws > deadline) ++exceed;
    }
  }
  return exceed;
}

}  // namespace

TailCheck tail_bound_mc(std::uint64_t n, std::uint64_t m, double epsilon, std::uint64_t trials,
                        std::uint64_t seed) {
  if (m < 1 || m > n) throw std::invalid_argument("tail_bound_mc: need 1 <= m <= n");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("tail_bound_mc: epsilon must lie in (0, 1)");
  }
  if (trials == 0) throw std::invalid_argument("tail_bound_mc: trials must be positive");

  TailCheck c;
  c.n = n;
  c.m = m;
  c.epsilon = epsilon;
  c.trials = trials;
  c.deadline_used = coupon_deadline(m, epsilon);
  c.exceedances = count_exceedances(n, m, c.deadline_used, trials, seed);
  c.empirical_tail = static_cast<double>(c.exceedances) / static_cast<double>(trials);

  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double log_bound = static_cast<double>(c.deadline_used + 1) * std::log(md / nd) +
                           log_choose(n, m) + std::log(epsilon);
  c.bound = std::exp(log_bound);
  const double b = std::min(c.bound, 1.0);
  c.standard_error = std::sqrt(b * (1.0 - b) / static_cast<double>(trials));
  c.within_bound = c.empirical_tail <= c.bound + 3.0 * c.standard_error;
  return c;
}

TailCheck complete_collection_mc(std::uint64_t n, double epsilon, std::uint64_t trials,
                           std::uint64_t seed) {
  return tail_bound_mc(n, n, epsilon, trials, seed);
}

double expected_time_estimate(std::uint64_t n, double epsilon, double kappa, double t_sample,
                              double p_desirable) {
  if (!(p_desirable > 0.0 && p_desirable <= 1.0)) {
    throw std::invalid_argument("expected_time_estimate: p_desirable must lie in (0, 1]");
  }
  if (!(t_sample >= 0.0)) {
    throw std::invalid_argument("expected_time_estimate: t_sample must be nonnegative");
  }
  return static_cast<double>(bounds::sample_budget(n, epsilon, kappa)) * t_sample / p_desirable;
}

ExponentialFit fit_exponential(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_exponential: size mismatch");
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] > 0.0 && std::isfinite(y[i])) pts.emplace_back(x[i], std::log(y[i]));
  }
  if (pts.size() < 2) throw std::invalid_argument("fit_exponential: need two positive points");

  const double k = static_cast<double>(pts.size());
  double sx = 0, sy = 0;
  for (const auto& [a, b] : pts) {
    sx += a;
    sy += b;
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [a, b] : pts) {
    sxx += (a - mx) * (a - mx);
    sxy += (a - mx) * (b - my);
    syy += (b - my) * (b - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_exponential: degenerate x range");
  const double slope = sxy / sxx;
  ExponentialFit fit;
  fit.base = std::exp(slope);
  fit.prefactor = std::exp(my - slope * mx);
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.points = pts.size();
  return fit;
}

}  // namespace fairenum::stats
