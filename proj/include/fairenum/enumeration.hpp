#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fairenum/sampler.hpp"
#include "fairenum/solution.hpp"

namespace fairenum {

enum class StopReason {
  deadline_missed,  // normal termination; the epsilon guarantee applies
  budget_cap,       // raw-draw cap reached first; no guarantee
};

std::string_view to_string(StopReason reason);

enum class TraceKind {
  accepted_new,       // accepted draw not seen before at this threshold
  accepted_repeat,    // accepted draw already collected
  rejected,           // cost above the current threshold (optimization only)
  threshold_lowered,  // cheaper solution found; collection restarts
  deadline_met,       // |S| >= m at the m-th deadline
  deadline_missed,    // |S| <  m at the m-th deadline; enumeration stops
};

std::string_view to_string(TraceKind kind);

struct TraceEvent {
  std::uint64_t tau;  // accepted-sample count after the event
  TraceKind kind;
  std::uint64_t m;    // current target number of distinct solutions
  double cost;        // cost of the draw, or the threshold for deadline events
};

struct EnumerationOptions {
  // Hard cap on raw sampler draws, rejected ones included.
  std::optional<std::uint64_t> budget_cap;
  bool record_trace = false;
};

struct EnumerationResult {
  std::vector<Solution> solutions;  // distinct, sorted by key
  double theta = 0.0;               // minimum cost observed
  std::uint64_t accepted_samples = 0;
  std::uint64_t raw_draws = 0;
  std::uint64_t threshold_updates = 0;
  StopReason stop_reason = StopReason::deadline_missed;
  std::vector<TraceEvent> trace;
};

// Collects distinct feasible solutions from a fair sampler, checking the
// deadline ceil(m ln(m kappa1 / epsilon)) for m = 2, 3, ... and stopping at
// the first one missed. Every draw counts as accepted. With a fair sampler the
// result misses a feasible solution with probability below epsilon.
// Requires 0 < epsilon < 1/e.
EnumerationResult enumerate_csp(Sampler& sampler, double epsilon,
                                const EnumerationOptions& options = {});

// Enumerates the minimum-cost solutions of a cost-ordered fair sampler.
// Requires 0 < epsilon < e^-1.5.
EnumerationResult enumerate_opt(Sampler& sampler, double epsilon,
                                const EnumerationOptions& options = {});

struct ThresholdOutcome {
  std::vector<Solution> solutions;  // sorted by key
  double theta = 0.0;
  bool lowered = false;             // a cheaper draw ended the collection
  std::uint64_t accepted_samples = 0;
  std::uint64_t raw_draws = 0;
  StopReason stop_reason = StopReason::deadline_missed;
  std::vector<TraceEvent> trace;
};

// One collection phase at fixed threshold theta, starting from seed (whose
// cost must equal theta; it counts as accepted sample 1). Draws above theta
// are rejected without advancing the count; a draw below theta ends the phase
// and is returned alone with its cost. Deadlines use kappa2.
ThresholdOutcome enumerate_threshold(Sampler& sampler, double theta,
                                     const Solution& seed, double epsilon,
                                     const EnumerationOptions& options = {});

}  // namespace fairenum
