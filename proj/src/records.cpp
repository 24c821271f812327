#include "records.hpp"

#include <set>
#include <stdexcept>

namespace fairenum::records {
namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!ok.contains(key)) throw std::invalid_argument(std::string(what) + ": unknown key '" + key + "'");
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json tail_json(const stats::TailCheck& c) {
  return {{"n", c.n},
          {"m", c.m},
          {"epsilon", c.epsilon},
          {"deadline", c.deadline_used},
          {"trials", c.trials},
          {"exceedances", c.exceedances},
          {"empirical_tail", c.empirical_tail},
          {"bound", c.bound},
          {"standard_error", c.standard_error},
          {"within_bound", c.within_bound}};
}

json guarantee_json(const campaigns::GuaranteeCheck& c) {
  return {{"label", c.label},
          {"epsilon", c.epsilon},
          {"trials", c.trials},
          {"failures", c.failures},
          {"failure_rate", c.failure_rate},
          {"standard_error", c.standard_error},
          {"below_epsilon", c.below_epsilon}};
}

}  // namespace

json to_json(const ising::AnnealSchedule& s) {
  return {{"sweeps", s.sweeps},
          {"beta_initial", s.beta_initial},
          {"beta_final", s.beta_final},
          {"interpolation", s.interpolation == ising::Interpolation::geometric ? "geometric" : "linear"},
          {"order", s.order == ising::ProposalOrder::sequential ? "sequential" : "random"}};
}

ising::AnnealSchedule schedule_from_json(const json& j) {
  check_keys(j, {"sweeps", "beta_initial", "beta_final", "interpolation", "order"}, "schedule");
  ising::AnnealSchedule s;
  read(j, "sweeps", s.sweeps);
  read(j, "beta_initial", s.beta_initial);
  read(j, "beta_final", s.beta_final);
  if (j.contains("interpolation")) {
    const auto v = j.at("interpolation").get<std::string>();
    if (v == "geometric") s.interpolation = ising::Interpolation::geometric;
    else if (v == "linear") s.interpolation = ising::Interpolation::linear;
    else throw std::invalid_argument("schedule: interpolation must be geometric or linear");
  }
  if (j.contains("order")) {
    const auto v = j.at("order").get<std::string>();
    if (v == "sequential") s.order = ising::ProposalOrder::sequential;
    else if (v == "random") s.order = ising::ProposalOrder::random;
    else throw std::invalid_argument("schedule: order must be sequential or random");
  }
  s.validate();
  return s;
}

json to_json(const experiment::ExperimentConfig& c) {
  // threads is an execution detail and does not affect results, so it is
  // left out of the record.
  return {{"problem_id", c.problem_id},
          {"n_vertices", c.n_vertices},
          {"density", c.density},
          {"graph_seed", c.graph_seed},
          {"epsilon", c.epsilon},
          {"penalty", c.penalty},
          {"schedule", to_json(c.schedule)},
          {"runs", c.runs},
          {"master_seed", c.master_seed},
          {"exact_budget_seconds", c.exact_budget_seconds},
          {"budget_cap", c.budget_cap}};
}

experiment::ExperimentConfig experiment_config_from_json(const json& j) {
  check_keys(j,
             {"problem_id", "n_vertices", "density", "graph_seed", "epsilon", "penalty", "schedule",
              "runs", "master_seed", "exact_budget_seconds", "budget_cap", "threads"},
             "experiment config");
  experiment::ExperimentConfig c;
  read(j, "problem_id", c.problem_id);
  read(j, "n_vertices", c.n_vertices);
  read(j, "density", c.density);
  read(j, "graph_seed", c.graph_seed);
  read(j, "epsilon", c.epsilon);
  read(j, "penalty", c.penalty);
  if (j.contains("schedule")) c.schedule = schedule_from_json(j.at("schedule"));
  read(j, "runs", c.runs);
  read(j, "master_seed", c.master_seed);
  read(j, "exact_budget_seconds", c.exact_budget_seconds);
  read(j, "budget_cap", c.budget_cap);
  read(j, "threads", c.threads);
  return c;
}

json to_json(const experiment::ExperimentRecord& r) {
  json runs = json::array();
  for (const auto& o : r.runs) {
    runs.push_back({{"run", o.run_index},
                    {"seed", o.seed},
                    {"solutions", o.solutions},
                    {"n_found", o.solutions.size()},
                    {"theta", o.theta},
                    {"accepted_samples", o.accepted_samples},
                    {"raw_draws", o.raw_draws},
                    {"anneals", o.anneals},
                    {"infeasible", o.infeasible},
                    {"threshold_updates", o.threshold_updates},
                    {"stop_reason", o.stop_reason},
                    {"success", o.success ? json(*o.success) : json(nullptr)},
                    {"coverage", optional_json(o.coverage)},
                    {"wall_seconds", o.wall_seconds}});
  }

  json fairness = nullptr;
  if (r.fairness) {
    fairness = {{"chi2", r.fairness->chi2},
                {"p_value", r.fairness->p_value},
                {"pmax_over_pmin", optional_json(r.fairness->pmax_over_pmin)},
                {"ratio_unbounded", !r.fairness->pmax_over_pmin.has_value()}};
  }

  const auto& s = r.summary;
  return {{"record", "experiment"},
          {"problem_id", r.problem_id},
          {"config", to_json(r.config)},
          {"graph", {{"n_vertices", r.config.n_vertices},
                     {"n_edges", r.n_edges},
                     {"density", r.actual_density},
                     {"seed", r.config.graph_seed}}},
          {"reference", {{"kind", r.reference},
                         {"exact_solved", r.exact_solved},
                         {"max_clique_size", r.max_clique_size},
                         {"n_optimal", r.reference_solutions.size()},
                         {"solutions", r.reference_solutions},
                         {"exact_seconds", r.exact_seconds}}},
          {"summary", {{"successes", s.successes},
                       {"runs", s.runs},
                       {"p_value_vs_target", s.p_value_vs_target},
                       {"ci_low", s.ci_low},
                       {"ci_high", s.ci_high},
                       {"mean_coverage", s.mean_coverage},
                       {"incompatible", s.incompatible}}},
          {"ground_state_counts", r.ground_state_counts},
          {"fairness", fairness},
          {"fairness_category", r.fairness_category},
          {"runs", runs},
          {"timing", {{"mean_run_seconds", r.mean_run_seconds},
                      {"mean_successful_run_seconds", r.mean_successful_run_seconds},
                      {"sample_seconds", r.sample_seconds}}}};
}

json to_json(const campaigns::CampaignConfig& c) {
  json nm = json::array();
  for (const auto& [n, m] : c.partial_nm) nm.push_back({n, m});
  return {{"seed", c.seed},
          {"coupon_trials", c.coupon_trials},
          {"guarantee_trials", c.guarantee_trials},
          {"complete_n", c.complete_n},
          {"complete_epsilon", c.complete_epsilon},
          {"partial_nm", nm},
          {"partial_epsilon", c.partial_epsilon},
          {"csp_max_n", c.csp_max_n},
          {"guarantee_epsilon", c.guarantee_epsilon}};
}

campaigns::CampaignConfig campaign_config_from_json(const json& j) {
  check_keys(j,
             {"seed", "coupon_trials", "guarantee_trials", "complete_n", "complete_epsilon", "partial_nm",
              "partial_epsilon", "csp_max_n", "guarantee_epsilon", "threads"},
             "campaign config");
  campaigns::CampaignConfig c;
  read(j, "seed", c.seed);
  read(j, "coupon_trials", c.coupon_trials);
  read(j, "guarantee_trials", c.guarantee_trials);
  read(j, "complete_n", c.complete_n);
  read(j, "complete_epsilon", c.complete_epsilon);
  if (j.contains("partial_nm")) {
    c.partial_nm.clear();
    for (const auto& p : j.at("partial_nm")) {
      c.partial_nm.emplace_back(p.at(0).get<std::uint64_t>(), p.at(1).get<std::uint64_t>());
    }
  }
  read(j, "partial_epsilon", c.partial_epsilon);
  read(j, "csp_max_n", c.csp_max_n);
  read(j, "guarantee_epsilon", c.guarantee_epsilon);
  read(j, "threads", c.threads);
  return c;
}

json to_json(const campaigns::BoundsReport& r) {
  json l1 = json::array(), l2 = json::array(), t1 = json::array(), t2 = json::array();
  for (const auto& c : r.complete_collection) l1.push_back(tail_json(c));
  for (const auto& c : r.partial_collection) l2.push_back(tail_json(c));
  for (const auto& c : r.csp) t1.push_back(guarantee_json(c));
  for (const auto& c : r.opt) t2.push_back(guarantee_json(c));
  return {{"record", "bounds"},
          {"complete_collection", l1},
          {"partial_collection", l2},
          {"csp_enumeration", t1},
          {"opt_enumeration", t2},
          {"all_pass", r.all_pass}};
}

json to_json(const EnumerationResult& r) {
  json sols = json::array();
  for (const auto& s : r.solutions) sols.push_back({{"key", s.key.to_string()}, {"cost", s.cost}});
  json j = {{"record", "enumeration"},
            {"solutions", sols},
            {"n_found", r.solutions.size()},
            {"theta", r.theta},
            {"accepted_samples", r.accepted_samples},
            {"raw_draws", r.raw_draws},
            {"threshold_updates", r.threshold_updates},
            {"stop_reason", std::string(to_string(r.stop_reason))}};
  if (!r.trace.empty()) {
    json trace = json::array();
    for (const auto& e : r.trace) {
      trace.push_back({{"tau", e.tau}, {"kind", std::string(to_string(e.kind))}, {"m", e.m}, {"cost", e.cost}});
    }
    j["trace"] = trace;
  }
  return j;
}

json strip_timings(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [key, value] : j.items()) {
      if (key.size() >= 8 && key.ends_with("_seconds")) continue;
      out[key] = strip_timings(value);
    }
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(strip_timings(v));
    return out;
  }
  return j;
}

}  // namespace fairenum::records
