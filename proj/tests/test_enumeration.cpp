#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fairenum/bounds.hpp"
#include "fairenum/enumeration.hpp"
#include "fairenum/sampler.hpp"

using namespace fairenum;

namespace {

Solution sol(const char* bits, double cost = 0.0) { return {SolutionKey::from_string(bits), cost}; }

// Replays a fixed script, then repeats `tail` cyclically forever.
class ScriptedSampler final : public Sampler {
 public:
  ScriptedSampler(std::vector<Solution> script, std::vector<Solution> tail)
      : script_(std::move(script)), tail_(std::move(tail)) {}
  Solution draw() override {
    ++draws_;
    if (pos_ < script_.size()) return script_[pos_++];
    return tail_[(pos_++ - script_.size()) % tail_.size()];
  }
  std::uint64_t draws() const { return draws_; }

 private:
  std::vector<Solution> script_, tail_;
  std::size_t pos_ = 0;
  std::uint64_t draws_ = 0;
};

// Tracks the cheapest cost ever drawn.
class MinTracker final : public Sampler {
 public:
  explicit MinTracker(Sampler& inner) : inner_(inner) {}
  Solution draw() override {
    auto s = inner_.draw();
    min_cost = std::min(min_cost, s.cost);
    return s;
  }
  double min_cost = std::numeric_limits<double>::infinity();

 private:
  Sampler& inner_;
};

std::vector<std::string> keys(const std::vector<Solution>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.key.to_string());
  return out;
}

}  // namespace

TEST_CASE("csp: single feasible solution stops at the m=2 deadline") {
  ScriptedSampler s({}, {sol("101")});
  const auto r = enumerate_csp(s, 0.01);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].key.to_string() == "101");
  CHECK(r.accepted_samples == 11);
  CHECK(r.raw_draws == 11);
  CHECK(r.stop_reason == StopReason::deadline_missed);
}

TEST_CASE("csp: walk-through with two solutions halts at tau 18") {
  // A at tau 1, B at tau 5, nothing new afterwards.
  const auto a = sol("10"), b = sol("01");
  ScriptedSampler s({a, a, a, a, b}, {a, b});
  EnumerationOptions opt;
  opt.record_trace = true;
  const auto r = enumerate_csp(s, 0.01, opt);
  CHECK(keys(r.solutions) == std::vector<std::string>{"01", "10"});
  CHECK(r.accepted_samples == 18);
  CHECK(r.raw_draws == 18);

  // Trace: deadline 11 met with m=2, deadline 18 missed with m=3.
  std::vector<TraceEvent> deadlines;
  for (const auto& e : r.trace) {
    if (e.kind == TraceKind::deadline_met || e.kind == TraceKind::deadline_missed) deadlines.push_back(e);
  }
  REQUIRE(deadlines.size() == 2);
  CHECK(deadlines[0].kind == TraceKind::deadline_met);
  CHECK(deadlines[0].tau == 11);
  CHECK(deadlines[0].m == 2);
  CHECK(deadlines[1].kind == TraceKind::deadline_missed);
  CHECK(deadlines[1].tau == 18);
  CHECK(deadlines[1].m == 3);
  CHECK(r.trace.front().tau == 1);
  CHECK(r.trace.front().kind == TraceKind::accepted_new);
}

TEST_CASE("csp: a solution is never returned twice") {
  const auto items = one_hot_solutions(4);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = FiniteSampler::uniform(items, seed);
    const auto r = enumerate_csp(s, 0.05);
    REQUIRE(!r.solutions.empty());
    for (std::size_t i = 1; i < r.solutions.size(); ++i) {
      REQUIRE(r.solutions[i - 1].key < r.solutions[i].key);
    }
  }
}

TEST_CASE("opt: single solution of cost 7 stops after 13 accepted draws") {
  ScriptedSampler s({}, {sol("11", 7.0)});
  const auto r = enumerate_opt(s, 0.01);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.theta == 7.0);
  CHECK(r.accepted_samples == 13);
  CHECK(r.threshold_updates == 0);
}

TEST_CASE("opt: walk-through with a threshold update and reset") {
  const auto x = sol("100", 1.0), y = sol("010", 0.0), z = sol("001", 0.0);
  // x first; y is the 3rd draw and lowers theta; z arrives as accepted
  // draw 5 after the reset; costlier x draws are rejected afterwards.
  ScriptedSampler s({x, x, y, y, x, y, y, z}, {y, x, z});
  EnumerationOptions opt;
  opt.record_trace = true;
  const auto r = enumerate_opt(s, 0.01, opt);
  CHECK(keys(r.solutions) == std::vector<std::string>{"001", "010"});
  CHECK(r.theta == 0.0);
  CHECK(r.threshold_updates == 1);
  CHECK(r.accepted_samples == 20);
  for (const auto& sol_ : r.solutions) CHECK(sol_.cost == r.theta);

  auto lowered = std::find_if(r.trace.begin(), r.trace.end(),
                              [](const TraceEvent& e) { return e.kind == TraceKind::threshold_lowered; });
  REQUIRE(lowered != r.trace.end());
  CHECK(lowered->cost == 0.0);
  CHECK(lowered->tau == 2);  // two accepted draws at theta = 1 before the update
  const auto next = std::next(lowered);
  REQUIRE(next != r.trace.end());
  CHECK(next->tau == 1);
  CHECK(next->kind == TraceKind::accepted_new);

  // After the reset, the first x draw is rejected without advancing tau.
  const auto rej = std::find_if(next, r.trace.end(),
                                [](const TraceEvent& e) { return e.kind == TraceKind::rejected; });
  REQUIRE(rej != r.trace.end());
  CHECK(rej->cost == 1.0);
  CHECK(std::next(rej)->tau == rej->tau + 1);
}

TEST_CASE("threshold: two solutions then nothing new through tau 20") {
  const auto y1 = sol("10", 3.0), y2 = sol("01", 3.0);
  ScriptedSampler s({y2}, {y1, y2});
  const auto r = enumerate_threshold(s, 3.0, y1, 0.01);
  CHECK(keys(r.solutions) == std::vector<std::string>{"01", "10"});
  CHECK(r.theta == 3.0);
  CHECK_FALSE(r.lowered);
  CHECK(r.accepted_samples == 20);
  CHECK(r.raw_draws == 19);  // the seed counts as accepted sample 1
}

TEST_CASE("threshold: a cheaper draw ends the phase at once") {
  const auto y1 = sol("10", 3.0), z = sol("11", 2.0);
  ScriptedSampler s({y1, z}, {y1});
  const auto r = enumerate_threshold(s, 3.0, y1, 0.01);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].key.to_string() == "11");
  CHECK(r.theta == 2.0);
  CHECK(r.lowered);
  CHECK(r.accepted_samples == 2);
  CHECK(s.draws() == 2);
}

TEST_CASE("threshold: sampler stuck on the seed stops after 13") {
  const auto y1 = sol("10", 3.0);
  ScriptedSampler s({}, {y1});
  const auto r = enumerate_threshold(s, 3.0, y1, 0.01);
  CHECK(r.solutions.size() == 1);
  CHECK(r.accepted_samples == 13);
  CHECK_THROWS_AS(enumerate_threshold(s, 2.0, y1, 0.01), std::invalid_argument);
}

TEST_CASE("costlier draws do not advance tau") {
  const auto y = sol("10", 0.0), bad = sol("01", 5.0);
  ScriptedSampler s({}, {y, bad, bad});
  const auto r = enumerate_opt(s, 0.01);
  CHECK(r.accepted_samples == 13);
  CHECK(r.raw_draws == 1 + 12 * 3);
}

TEST_CASE("budget cap ends the run and is reported") {
  ScriptedSampler s({}, {sol("1")});
  EnumerationOptions opt;
  opt.budget_cap = 5;
  const auto r = enumerate_csp(s, 0.01, opt);
  CHECK(r.stop_reason == StopReason::budget_cap);
  CHECK(r.raw_draws == 5);
  CHECK(r.accepted_samples == 5);

  ScriptedSampler s2({}, {sol("1", 0.0), sol("0", 1.0)});
  const auto r2 = enumerate_opt(s2, 0.01, opt);
  CHECK(r2.stop_reason == StopReason::budget_cap);
  CHECK(r2.raw_draws == 5);

  opt.budget_cap = 0;
  const auto r3 = enumerate_opt(s2, 0.01, opt);
  CHECK(r3.stop_reason == StopReason::budget_cap);
  CHECK(r3.solutions.empty());
}

TEST_CASE("domain errors") {
  ScriptedSampler s({}, {sol("1")});
  CHECK_THROWS_AS(enumerate_csp(s, 0.5), std::domain_error);
  CHECK_THROWS_AS(enumerate_opt(s, 0.25), std::domain_error);
  CHECK_NOTHROW(enumerate_csp(s, 0.25));
}

TEST_CASE("theta is the minimum cost ever drawn") {
  std::vector<Solution> support;
  for (int i = 0; i < 12; ++i) {
    SolutionKey k(12);
    k.set(i);
    support.push_back({k, static_cast<double>(i % 4)});
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto f = FiniteSampler::boltzmann(support, 0.3, seed);
    MinTracker t(f);
    const auto r = enumerate_opt(t, 0.05);
    REQUIRE(r.theta == t.min_cost);
    for (const auto& x : r.solutions) REQUIRE(x.cost == r.theta);
  }
}

TEST_CASE("replay: same seed, same result") {
  const auto items = one_hot_solutions(6);
  EnumerationOptions opt;
  opt.record_trace = true;
  for (std::uint64_t seed : {1ULL, 99ULL, 12345ULL}) {
    auto a = FiniteSampler::uniform(items, seed);
    auto b = FiniteSampler::uniform(items, seed);
    const auto ra = enumerate_csp(a, 0.05, opt);
    const auto rb = enumerate_csp(b, 0.05, opt);
    CHECK(keys(ra.solutions) == keys(rb.solutions));
    CHECK(ra.accepted_samples == rb.accepted_samples);
    REQUIRE(ra.trace.size() == rb.trace.size());
    for (std::size_t i = 0; i < ra.trace.size(); ++i) {
      CHECK(ra.trace[i].tau == rb.trace[i].tau);
      CHECK(ra.trace[i].kind == rb.trace[i].kind);
    }
  }
}

TEST_CASE("successful runs stop at the deadline for n+1") {
  const double eps = 0.05;
  const double k1 = bounds::kappa1(eps);
  const double k2 = bounds::kappa2(eps);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto items = one_hot_solutions(n);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto a = FiniteSampler::uniform(items, seed);
      const auto r = enumerate_csp(a, eps);
      if (r.solutions.size() == n) REQUIRE(r.accepted_samples == bounds::sample_budget(n, eps, k1));
      auto b = FiniteSampler::uniform(items, seed + 1000);
      const auto r2 = enumerate_opt(b, eps);
      if (r2.solutions.size() == n) REQUIRE(r2.accepted_samples == bounds::sample_budget(n, eps, k2));
    }
  }
}

TEST_CASE("Monte Carlo: csp over 5 uniform items") {
  const auto items = one_hot_solutions(5);
  int failures = 0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    auto s = FiniteSampler::uniform(items, derive_seed(7, 5, t));
    if (enumerate_csp(s, 0.05).solutions.size() != 5) ++failures;
  }
  CHECK(static_cast<double>(failures) / trials < 0.05);
}

TEST_CASE("Monte Carlo: opt over {a:0, b:0, c:1}") {
  const std::vector<Solution> support{sol("100", 0.0), sol("010", 0.0), sol("001", 1.0)};
  int exact = 0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    auto s = FiniteSampler::uniform(support, derive_seed(11, 3, t));
    const auto r = enumerate_opt(s, 0.05);
    if (keys(r.solutions) == std::vector<std::string>{"010", "100"}) ++exact;
  }
  CHECK(static_cast<double>(exact) / trials > 0.95);
}
