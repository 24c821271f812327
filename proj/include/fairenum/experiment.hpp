#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairenum/graph.hpp"
#include "fairenum/ising.hpp"
#include "fairenum/stats.hpp"

namespace fairenum::experiment {

// Parameters of one maximum-clique enumeration experiment: a graph solved
// `runs` times by the optimization enumerator on top of the annealing clique
// sampler, each run with its own derived seed.
struct ExperimentConfig {
  std::string problem_id;  // empty: derived from the graph parameters
  std::size_t n_vertices = 10;
  double density = 0.5;
  std::uint64_t graph_seed = 0;
  double epsilon = 0.01;
  double penalty = 2.0;
  ising::AnnealSchedule schedule;
  std::uint64_t runs = 100;
  std::uint64_t master_seed = 0;
  double exact_budget_seconds = 60.0;  // <= 0: no budget
  std::uint64_t budget_cap = 0;  // raw draws per run, 0 = none
  unsigned threads = 1;
};

// "er-n<n>-d<density>-g<graph_seed>"
std::string default_problem_id(const ExperimentConfig& config);

// Seed of run `run_index`: derive_seed(master_seed, fnv1a(problem_id), run_index).
std::uint64_t run_seed(const ExperimentConfig& config, std::uint64_t run_index);

struct RunOutcome {
  std::uint64_t run_index = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> solutions;  // membership bit strings, sorted
  double theta = 0.0;
  std::uint64_t accepted_samples = 0;
  std::uint64_t raw_draws = 0;
  std::uint64_t anneals = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t threshold_updates = 0;
  std::string stop_reason;
  std::optional<bool> success;
  std::optional<double> coverage;
  double wall_seconds = 0.0;
};

struct ExperimentRecord {
  ExperimentConfig config;
  std::string problem_id;
  std::size_t n_edges = 0;
  double actual_density = 0.0;

  // "exact" when the reference enumerator finished inside its budget;
  // otherwise "best_found" (the largest cliques seen across runs stand in).
  std::string reference;
  bool exact_solved = false;
  std::vector<std::string> reference_solutions;
  std::size_t max_clique_size = 0;
  double exact_seconds = 0.0;

  std::vector<RunOutcome> runs;
  stats::TrialSummary summary;

  // Draw counts of each reference solution over all runs.
  std::map<std::string, std::uint64_t> ground_state_counts;
  std::optional<stats::FairnessReport> fairness;  // needs >= 2 reference solutions
  std::string fairness_category;                  // unique | fair | unfair

  double mean_run_seconds = 0.0;
  double mean_successful_run_seconds = 0.0;
  double sample_seconds = 0.0;  // mean wall time per anneal
};

ExperimentRecord run_experiment(const ExperimentConfig& config);
ExperimentRecord run_experiment(const ExperimentConfig& config, const clique::Graph& graph);

// Grid of instances for a benchmark sweep.
struct SweepConfig {
  std::vector<std::size_t> sizes{10, 20, 30, 40, 50, 60};
  std::vector<double> densities{0.25, 0.5, 0.75};
  std::size_t instances_per_cell = 1;
  ExperimentConfig base;  // everything except n, density, graph seed, id
};

// One config per (size, density, instance), with graph seeds derived from
// base.master_seed. Deterministic order: density-major, then size, then
// instance.
std::vector<ExperimentConfig> plan_sweep(const SweepConfig& sweep);

}  // namespace fairenum::experiment
