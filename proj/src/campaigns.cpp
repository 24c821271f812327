#include "fairenum/campaigns.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fairenum/enumeration.hpp"
#include "fairenum/random.hpp"
#include "parallel.hpp"

namespace fairenum::campaigns {
namespace {

constexpr std::uint64_t kCspStream = 0x7431;
constexpr std::uint64_t kOptStream = 0x7432;
constexpr std::uint64_t kTailStream = 0x1E33;

GuaranteeCheck finish(std::string label, double epsilon, std::uint64_t trials,
                    std::uint64_t failures) {
  GuaranteeCheck c;
  c.label = std::move(label);
  c.epsilon = epsilon;
  c.trials = trials;
  c.failures = failures;
  c.failure_rate = static_cast<double>(failures) / static_cast<double>(trials);
  c.standard_error = std::sqrt(c.failure_rate * (1.0 - c.failure_rate) / static_cast<double>(trials));
  c.below_epsilon = c.failure_rate < epsilon;
  return c;
}

}  // namespace

Landscape make_landscape(std::size_t n_optimal, std::size_t n_suboptimal) {
  if (n_optimal == 0) throw std::invalid_argument("make_landscape: need at least one optimum");
  Landscape l;
  l.name = std::to_string(n_optimal) + "opt+" + std::to_string(n_suboptimal) + "sub";
  l.n_optimal = n_optimal;
  l.solutions = one_hot_solutions(n_optimal + n_suboptimal, 0.0);
  for (std::size_t i = 0; i < n_suboptimal; ++i) {
    l.solutions[n_optimal + i].cost = 1.0 + static_cast<double>(i % 3);
  }
  return l;
}

std::string to_string(Distribution d) {
  return d == Distribution::uniform ? "uniform" : "boltzmann";
}

GuaranteeCheck csp_failure_mc(std::size_t n, double epsilon, std::uint64_t trials,
                         std::uint64_t seed) {
  if (n == 0 || trials == 0) throw std::invalid_argument("csp_failure_mc: n and trials must be positive");
  const auto items = one_hot_solutions(n);
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto sampler = FiniteSampler::uniform(items, derive_seed(seed, kCspStream + n, t));
    if (enumerate_csp(sampler, epsilon).solutions.size() != n) ++failures;
  }
  return finish("csp uniform n=" + std::to_string(n), epsilon, trials, failures);
}

GuaranteeCheck opt_failure_mc(const Landscape& landscape, Distribution distribution, double epsilon,
                         std::uint64_t trials, std::uint64_t seed, double boltzmann_beta) {
  if (trials == 0) throw std::invalid_argument("opt_failure_mc: trials must be positive");
  std::vector<SolutionKey> optimal;
  for (std::size_t i = 0; i < landscape.n_optimal; ++i) {
    optimal.push_back(landscape.solutions[i].key);
  }
  std::sort(optimal.begin(), optimal.end());

  const std::uint64_t stream =
      kOptStream ^ (landscape.solutions.size() << 8) ^ static_cast<std::uint64_t>(distribution);
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto s = derive_seed(seed, stream, t);
    auto sampler = distribution == Distribution::uniform
                       ? FiniteSampler::uniform(landscape.solutions, s)
                       : FiniteSampler::boltzmann(landscape.solutions, boltzmann_beta, s);
    const auto result = enumerate_opt(sampler, epsilon);
    bool ok = result.solutions.size() == optimal.size();
    for (std::size_t i = 0; ok && i < optimal.size(); ++i) {
      ok = result.solutions[i].key == optimal[i];
    }
    if (!ok) ++failures;
  }
  return finish("opt " + to_string(distribution) + " " + landscape.name, epsilon, trials, failures);
}

BoundsReport validate_bounds(const CampaignConfig& config) {
  BoundsReport report;

  struct Job {
    std::uint64_t n, m;
    double epsilon;
  };
  std::vector<Job> complete_jobs;
  for (auto n : config.complete_n) {
    for (double e : config.complete_epsilon) complete_jobs.push_back({n, n, e});
  }
  report.complete_collection.resize(complete_jobs.size());
  detail::parallel_for(complete_jobs.size(), config.threads, [&](std::size_t i) {
    const auto& j = complete_jobs[i];
    report.complete_collection[i] = stats::complete_collection_mc(j.n, j.epsilon, config.coupon_trials,
                                               derive_seed(config.seed, kTailStream, i));
  });

  report.partial_collection.resize(config.partial_nm.size());
  detail::parallel_for(config.partial_nm.size(), config.threads, [&](std::size_t i) {
    const auto [n, m] = config.partial_nm[i];
    report.partial_collection[i] = stats::tail_bound_mc(n, m, config.partial_epsilon, config.coupon_trials,
                                            derive_seed(config.seed, kTailStream + 1, i));
  });

  report.csp.resize(config.csp_max_n);
  detail::parallel_for(config.csp_max_n, config.threads, [&](std::size_t i) {
    report.csp[i] =
        csp_failure_mc(i + 1, config.guarantee_epsilon, config.guarantee_trials, config.seed);
  });

  const std::vector<Landscape> landscapes{make_landscape(2, 3), make_landscape(5, 20)};
  const std::vector<Distribution> dists{Distribution::uniform, Distribution::boltzmann};
  report.opt.resize(landscapes.size() * dists.size());
  detail::parallel_for(report.opt.size(), config.threads, [&](std::size_t i) {
    report.opt[i] = opt_failure_mc(landscapes[i / dists.size()], dists[i % dists.size()],
                                     config.guarantee_epsilon, config.guarantee_trials, config.seed);
  });

  report.all_pass = true;
  for (const auto& c : report.complete_collection) report.all_pass &= c.within_bound;
  for (const auto& c : report.partial_collection) report.all_pass &= c.within_bound;
  for (const auto& c : report.csp) report.all_pass &= c.below_epsilon;
  for (const auto& c : report.opt) report.all_pass &= c.below_epsilon;
  return report;
}

}  // namespace fairenum::campaigns
