#include "fairenum/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "fairenum/bounds.hpp"

namespace fairenum {

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::deadline_missed: return "deadline_missed";
    case StopReason::budget_cap: return "budget_cap";
  }
  return "unknown";
}

std::string_view to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::accepted_new: return "accepted_new";
    case TraceKind::accepted_repeat: return "accepted_repeat";
    case TraceKind::rejected: return "rejected";
    case TraceKind::threshold_lowered: return "threshold_lowered";
    case TraceKind::deadline_met: return "deadline_met";
    case TraceKind::deadline_missed: return "deadline_missed";
  }
  return "unknown";
}

namespace {

// Shared bookkeeping for one enumeration run: raw-draw budget and trace.
class DrawLedger {
 public:
  DrawLedger(Sampler& sampler, const EnumerationOptions& options)
      : sampler_(sampler), options_(options) {}

  std::optional<Solution> draw() {
    if (options_.budget_cap && raw_draws_ >= *options_.budget_cap) return std::nullopt;
    ++raw_draws_;
    return sampler_.draw();
  }

  void record(std::uint64_t tau, TraceKind kind, std::uint64_t m, double cost) {
    if (options_.record_trace) trace_.push_back({tau, kind, m, cost});
  }

  std::uint64_t raw_draws() const { return raw_draws_; }
  std::vector<TraceEvent> take_trace() { return std::move(trace_); }

 private:
  Sampler& sampler_;
  const EnumerationOptions& options_;
  std::uint64_t raw_draws_ = 0;
  std::vector<TraceEvent> trace_;
};

class CollectedSet {
 public:
  bool insert(const Solution& s) {
    if (!keys_.insert(s.key).second) return false;
    items_.push_back(s);
    return true;
  }
  std::size_t size() const { return items_.size(); }

  std::vector<Solution> sorted() const {
    auto out = items_;
    std::sort(out.begin(), out.end(),
              [](const Solution& a, const Solution& b) { return a.key < b.key; });
    return out;
  }

 private:
  std::unordered_set<SolutionKey, SolutionKeyHash> keys_;
  std::vector<Solution> items_;
};

struct PhaseResult {
  std::vector<Solution> solutions;
  double theta;
  bool lowered;
  std::uint64_t tau;
  StopReason stop;
};

// Collection at threshold theta. With reject_above == false every draw is
// accepted (the constraint-satisfaction case).
PhaseResult collect(DrawLedger& ledger, const Solution& seed, double theta, double kappa,
                    double epsilon, bool reject_above) {
  CollectedSet found;
  found.insert(seed);
  std::uint64_t tau = 1;
  ledger.record(tau, TraceKind::accepted_new, 2, seed.cost);

  for (std::uint64_t m = 2;; ++m) {
    const std::uint64_t due = bounds::deadline(m, kappa, epsilon);
    while (tau < due) {
      auto drawn = ledger.draw();
      if (!drawn) return {found.sorted(), theta, false, tau, StopReason::budget_cap};
      if (reject_above) {
        if (drawn->cost > theta) {
          ledger.record(tau, TraceKind::rejected, m, drawn->cost);
          continue;
        }
        if (drawn->cost < theta) {
          ledger.record(tau, TraceKind::threshold_lowered, m, drawn->cost);
          return {{*drawn}, drawn->cost, true, tau, StopReason::deadline_missed};
        }
      }
      ++tau;
      const bool fresh = found.insert(*drawn);
      ledger.record(tau, fresh ? TraceKind::accepted_new : TraceKind::accepted_repeat, m,
                    drawn->cost);
    }
    if (found.size() < m) {
      ledger.record(tau, TraceKind::deadline_missed, m, theta);
      return {found.sorted(), theta, false, tau, StopReason::deadline_missed};
    }
    ledger.record(tau, TraceKind::deadline_met, m, theta);
  }
}

}  // namespace

EnumerationResult enumerate_csp(Sampler& sampler, double epsilon,
                                const EnumerationOptions& options) {
  const double kappa = bounds::kappa1(epsilon);
  DrawLedger ledger(sampler, options);
  EnumerationResult result;

  auto first = ledger.draw();
  if (!first) {
    result.stop_reason = StopReason::budget_cap;
    return result;
  }
  auto phase = collect(ledger, *first, first->cost, kappa, epsilon, false);

  result.solutions = std::move(phase.solutions);
  result.theta = first->cost;
  for (const auto& s : result.solutions) result.theta = std::min(result.theta, s.cost);
  result.accepted_samples = phase.tau;
  result.raw_draws = ledger.raw_draws();
  result.stop_reason = phase.stop;
  result.trace = ledger.take_trace();
  return result;
}

EnumerationResult enumerate_opt(Sampler& sampler, double epsilon,
                                const EnumerationOptions& options) {
  const double kappa = bounds::kappa2(epsilon);
  DrawLedger ledger(sampler, options);
  EnumerationResult result;

  auto first = ledger.draw();
  if (!first) {
    result.stop_reason = StopReason::budget_cap;
    return result;
  }

  Solution seed = *first;
  double theta = first->cost;
  for (;;) {
    auto phase = collect(ledger, seed, theta, kappa, epsilon, true);
    result.accepted_samples = phase.tau;
    if (phase.stop == StopReason::budget_cap || !phase.lowered) {
      result.solutions = std::move(phase.solutions);
      result.theta = phase.theta;
      result.stop_reason = phase.stop;
      break;
    }
    ++result.threshold_updates;
    theta = phase.theta;
    seed = phase.solutions.front();
  }
  result.raw_draws = ledger.raw_draws();
  result.trace = ledger.take_trace();
  return result;
}

ThresholdOutcome enumerate_threshold(Sampler& sampler, double theta, const Solution& seed,
                                     double epsilon, const EnumerationOptions& options) {
  if (seed.cost != theta) {
    throw std::invalid_argument("enumerate_threshold: seed cost must equal theta");
  }
  const double kappa = bounds::kappa2(epsilon);
  DrawLedger ledger(sampler, options);
  auto phase = collect(ledger, seed, theta, kappa, epsilon, true);

  ThresholdOutcome out;
  out.solutions = std::move(phase.solutions);
  out.theta = phase.theta;
  out.lowered = phase.lowered;
  out.accepted_samples = phase.tau;
  out.raw_draws = ledger.raw_draws();
  out.stop_reason = phase.stop;
  out.trace = ledger.take_trace();
  return out;
}

}  // namespace fairenum
