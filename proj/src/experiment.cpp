#include "fairenum/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "fairenum/enumeration.hpp"
#include "fairenum/maxclique.hpp"
#include "fairenum/random.hpp"
#include "parallel.hpp"

namespace fairenum::experiment {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

constexpr std::uint64_t kGraphStream = 0x6EA9;

struct RunSlot {
  RunOutcome outcome;
  std::unordered_map<SolutionKey, std::uint64_t, SolutionKeyHash> draws;
  std::vector<Solution> found;
};

RunSlot execute_run(const ExperimentConfig& config, const std::string& problem_id,
                    const clique::Graph& graph, std::uint64_t run_index) {
  RunSlot slot;
  auto& out = slot.outcome;
  out.run_index = run_index;
  ExperimentConfig keyed = config;
  keyed.problem_id = problem_id;
  out.seed = run_seed(keyed, run_index);

  const auto start = Clock::now();
  clique::CliqueSampler sampler(graph, config.penalty, config.schedule, out.seed);
  CountingSampler counting(sampler);
  EnumerationOptions options;
  if (config.budget_cap > 0) options.budget_cap = config.budget_cap;
  const auto result = enumerate_opt(counting, config.epsilon, options);
  out.wall_seconds = seconds_since(start);

  for (const auto& s : result.solutions) out.solutions.push_back(s.key.to_string());
  out.theta = result.theta;
  out.accepted_samples = result.accepted_samples;
  out.raw_draws = result.raw_draws;
  out.anneals = sampler.anneals();
  out.infeasible = sampler.rejected();
  out.threshold_updates = result.threshold_updates;
  out.stop_reason = std::string(to_string(result.stop_reason));
  slot.draws = counting.counts();
  slot.found = result.solutions;
  return slot;
}

std::string density_label(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", d);
  return buf;
}

}  // namespace

std::string default_problem_id(const ExperimentConfig& config) {
  return "er-n" + std::to_string(config.n_vertices) + "-d" + density_label(config.density) +
         "-g" + std::to_string(config.graph_seed);
}

std::uint64_t run_seed(const ExperimentConfig& config, std::uint64_t run_index) {
  const auto id = config.problem_id.empty() ? default_problem_id(config) : config.problem_id;
  return derive_seed(config.master_seed, fnv1a(id), run_index);
}

ExperimentRecord run_experiment(const ExperimentConfig& config) {
  const auto g = clique::erdos_renyi(config.n_vertices, config.density, config.graph_seed);
  return run_experiment(config, g);
}

ExperimentRecord run_experiment(const ExperimentConfig& config, const clique::Graph& graph) {
  if (config.runs == 0) throw std::invalid_argument("run_experiment: runs must be positive");
  config.schedule.validate();
  if (!(config.penalty > 1.0)) throw std::invalid_argument("run_experiment: penalty must exceed 1");

  ExperimentRecord rec;
  rec.config = config;
  rec.config.n_vertices = graph.n_vertices();
  rec.problem_id = config.problem_id.empty() ? default_problem_id(rec.config) : config.problem_id;
  rec.config.problem_id = rec.problem_id;
  rec.n_edges = graph.n_edges();
  rec.actual_density = graph.density();

  const auto exact_start = Clock::now();
  const auto exact =
      config.exact_budget_seconds > 0.0
          ? clique::enumerate_max_cliques_exact(graph, std::chrono::duration<double>(config.exact_budget_seconds))
          : std::optional(clique::enumerate_max_cliques_exact(graph));
  rec.exact_seconds = seconds_since(exact_start);
  std::vector<Solution> truth;
  if (exact) {
    rec.exact_solved = true;
    rec.reference = "exact";
    for (const auto& c : *exact) truth.push_back({c.to_key(graph.n_vertices()), -static_cast<double>(c.size())});
  }

  std::vector<RunSlot> slots(config.runs);
  detail::parallel_for(slots.size(), config.threads, [&](std::size_t i) {
    slots[i] = execute_run(config, rec.problem_id, graph, i);
  });

  if (!exact) {
    // Best-found surrogate: the union of the cheapest sets returned by runs.
    rec.reference = "best_found";
    double best = 0.0;
    for (const auto& s : slots) best = std::min(best, s.outcome.theta);
    std::set<SolutionKey> keys;
    for (const auto& s : slots) {
      for (const auto& sol : s.found) {
        if (sol.cost == best) keys.insert(sol.key);
      }
    }
    for (const auto& k : keys) truth.push_back({k, best});
  }
  std::sort(truth.begin(), truth.end(), [](const Solution& a, const Solution& b) { return a.key < b.key; });
  for (const auto& t : truth) rec.reference_solutions.push_back(t.key.to_string());
  rec.max_clique_size = truth.empty() ? 0 : truth.front().key.count();

  std::uint64_t successes = 0;
  double coverage_sum = 0.0;
  double run_seconds = 0.0;
  double success_seconds = 0.0;
  std::uint64_t anneals = 0;
  std::vector<std::uint64_t> counts(truth.size(), 0);
  for (auto& s : slots) {
    auto& o = s.outcome;
    if (!truth.empty()) {
      const double cov = stats::solution_coverage(s.found, truth);
      o.coverage = cov;
      o.success = cov == 1.0 && s.found.size() == truth.size();
      coverage_sum += cov;
      if (*o.success) {
        ++successes;
        success_seconds += o.wall_seconds;
      }
    }
    run_seconds += o.wall_seconds;
    anneals += o.anneals;
    for (std::size_t k = 0; k < truth.size(); ++k) {
      const auto it = s.draws.find(truth[k].key);
      if (it != s.draws.end()) counts[k] += it->second;
    }
    rec.runs.push_back(std::move(o));
  }

  const double runs = static_cast<double>(config.runs);
  rec.mean_run_seconds = run_seconds / runs;
  rec.mean_successful_run_seconds = successes > 0 ? success_seconds / static_cast<double>(successes) : 0.0;
  rec.sample_seconds = anneals > 0 ? run_seconds / static_cast<double>(anneals) : 0.0;
  rec.summary = stats::summarize_trials(successes, config.runs, truth.empty() ? 0.0 : coverage_sum / runs);

  for (std::size_t k = 0; k < truth.size(); ++k) rec.ground_state_counts[rec.reference_solutions[k]] = counts[k];
  if (truth.size() >= 2) {
    const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total > 0) {
      rec.fairness = stats::chi_squared_uniform_test(counts);
      rec.fairness_category = rec.fairness->p_value >= 0.05 ? "fair" : "unfair";
    } else {
      rec.fairness_category = "unfair";
    }
  } else {
    rec.fairness_category = "unique";
  }
  return rec;
}

std::vector<ExperimentConfig> plan_sweep(const SweepConfig& sweep) {
  std::vector<ExperimentConfig> out;
  for (double d : sweep.densities) {
    for (auto n : sweep.sizes) {
      for (std::size_t i = 0; i < sweep.instances_per_cell; ++i) {
        ExperimentConfig c = sweep.base;
        c.n_vertices = n;
        c.density = d;
        c.problem_id.clear();
        const auto cell = "er-n" + std::to_string(n) + "-d" + density_label(d);
        c.graph_seed = derive_seed(sweep.base.master_seed, kGraphStream ^ fnv1a(cell), i);
        c.problem_id = cell + "-i" + std::to_string(i);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace fairenum::experiment
