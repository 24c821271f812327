#include "fairenum/fairenum.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>

#include "fairenum/bounds.hpp"
#include "fairenum/campaigns.hpp"
#include "fairenum/enumeration.hpp"
#include "fairenum/errors.hpp"
#include "fairenum/experiment.hpp"
#include "fairenum/graph_io.hpp"
#include "fairenum/maxclique.hpp"
#include "fairenum/model_io.hpp"
#include "fairenum/random.hpp"
#include "records.hpp"

struct fe_graph {
  fairenum::clique::Graph graph;
};

struct fe_model {
  fairenum::io::AnyModel model;
};

struct fe_result {
  fairenum::EnumerationResult result;
};

namespace {

using namespace fairenum;
using records::json;

thread_local std::string g_last_error;

fe_status fail(fe_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
fe_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return FE_OK;
  } catch (const ParseError& e) {
    return fail(FE_ERR_PARSE, e.what());
  } catch (const json::parse_error& e) {
    return fail(FE_ERR_PARSE, e.what());
  } catch (const json::exception& e) {
    return fail(FE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const SamplerError& e) {
    return fail(FE_ERR_SAMPLER, e.what());
  } catch (const std::domain_error& e) {
    return fail(FE_ERR_DOMAIN, e.what());
  } catch (const std::length_error& e) {
    return fail(FE_ERR_LIMIT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(FE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FE_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ising::AnnealSchedule to_schedule(const fe_anneal_params& a) {
  ising::AnnealSchedule s;
  s.sweeps = a.sweeps;
  s.beta_initial = a.beta_initial;
  s.beta_final = a.beta_final;
  s.interpolation = a.linear ? ising::Interpolation::linear : ising::Interpolation::geometric;
  s.order = a.random_order ? ising::ProposalOrder::random : ising::ProposalOrder::sequential;
  s.validate();
  return s;
}

EnumerationOptions to_options(const fe_enum_params& p) {
  EnumerationOptions o;
  if (p.budget_cap > 0) o.budget_cap = p.budget_cap;
  o.record_trace = p.record_trace != 0;
  return o;
}

ising::IsingModel ising_of(const fe_model& m) {
  if (const auto* q = std::get_if<ising::QuboModel>(&m.model)) return ising::qubo_to_ising(*q);
  return std::get<ising::IsingModel>(m.model);
}

}  // namespace

extern "C" {

const char* fe_last_error(void) { return g_last_error.c_str(); }

const char* fe_version(void) { return "0.1.0"; }

const char* fe_status_name(fe_status status) {
  switch (status) {
    case FE_OK: return "ok";
    case FE_ERR_DOMAIN: return "domain error";
    case FE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FE_ERR_PARSE: return "parse error";
    case FE_ERR_LIMIT: return "limit exceeded";
    case FE_ERR_SAMPLER: return "sampler error";
    case FE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void fe_string_free(char* s) { std::free(s); }

uint64_t fe_derive_seed(uint64_t master, uint64_t stream, uint64_t index) {
  return derive_seed(master, stream, index);
}

fe_status fe_kappa1(double epsilon, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = bounds::kappa1(epsilon);
  });
}

fe_status fe_kappa2(double epsilon, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = bounds::kappa2(epsilon);
  });
}

fe_status fe_deadline(uint64_t m, double kappa, double epsilon, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = bounds::deadline(m, kappa, epsilon);
  });
}

fe_status fe_sample_budget(uint64_t n, double epsilon, double kappa, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = bounds::sample_budget(n, epsilon, kappa);
  });
}

fe_status fe_graph_parse(const char* dimacs, fe_graph** out) {
  return guarded([&] {
    require(dimacs, "dimacs");
    require(out, "out");
    *out = new fe_graph{io::parse_graph(dimacs)};
  });
}

fe_status fe_graph_erdos_renyi(uint64_t n, double density, uint64_t seed, fe_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fe_graph{clique::erdos_renyi(n, density, seed)};
  });
}

void fe_graph_free(fe_graph* g) { delete g; }

uint64_t fe_graph_vertices(const fe_graph* g) { return g ? g->graph.n_vertices() : 0; }

uint64_t fe_graph_edges(const fe_graph* g) { return g ? g->graph.n_edges() : 0; }

fe_status fe_graph_to_dimacs(const fe_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(io::write_graph(g->graph));
  });
}

fe_status fe_graph_max_cliques_json(const fe_graph* g, double budget_seconds, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::vector<clique::VertexSet>> found;
    if (budget_seconds > 0.0) {
      found = clique::enumerate_max_cliques_exact(g->graph, std::chrono::duration<double>(budget_seconds));
    } else {
      found = clique::enumerate_max_cliques_exact(g->graph);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json j = {{"record", "exact"},
              {"n_vertices", g->graph.n_vertices()},
              {"n_edges", g->graph.n_edges()},
              {"solved", found.has_value()},
              {"search_seconds", elapsed}};
    if (found) {
      json cliques = json::array();
      for (const auto& c : *found) {
        json members = json::array();
        for (auto v : c.members()) members.push_back(v + 1);  // DIMACS numbering
        cliques.push_back(members);
      }
      j["max_clique_size"] = found->empty() ? 0 : found->front().size();
      j["n_cliques"] = found->size();
      j["cliques"] = cliques;
    }
    *out = dup_string(j.dump());
  });
}

fe_status fe_graph_clique_qubo(const fe_graph* g, double penalty, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(io::write_model(clique::max_clique_qubo(g->graph, penalty)));
  });
}

fe_status fe_model_parse(const char* text, fe_model** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new fe_model{io::read_model(text)};
  });
}

void fe_model_free(fe_model* m) { delete m; }

uint64_t fe_model_variables(const fe_model* m) {
  if (m == nullptr) return 0;
  if (const auto* q = std::get_if<ising::QuboModel>(&m->model)) return q->n_vars();
  return std::get<ising::IsingModel>(m->model).n_spins();
}

int fe_model_is_qubo(const fe_model* m) {
  return m != nullptr && std::holds_alternative<ising::QuboModel>(m->model);
}

fe_status fe_model_to_text(const fe_model* m, char** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = dup_string(std::visit([](const auto& x) { return io::write_model(x); }, m->model));
  });
}

fe_status fe_model_to_ising_text(const fe_model* m, char** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = dup_string(io::write_model(ising_of(*m)));
  });
}

void fe_enum_params_default(fe_enum_params* p) {
  if (p == nullptr) return;
  const ising::AnnealSchedule s;
  p->epsilon = 0.01;
  p->penalty = clique::kDefaultPenalty;
  p->anneal.sweeps = s.sweeps;
  p->anneal.beta_initial = s.beta_initial;
  p->anneal.beta_final = s.beta_final;
  p->anneal.linear = 0;
  p->anneal.random_order = 0;
  p->seed = 0;
  p->budget_cap = 0;
  p->record_trace = 0;
}

fe_status fe_enumerate_cliques(const fe_graph* g, const fe_enum_params* p, fe_result** out) {
  return guarded([&] {
    require(g, "graph");
    require(p, "params");
    require(out, "out");
    clique::CliqueSampler sampler(g->graph, p->penalty, to_schedule(p->anneal), p->seed);
    *out = new fe_result{enumerate_opt(sampler, p->epsilon, to_options(*p))};
  });
}

fe_status fe_enumerate_model(const fe_model* m, const fe_enum_params* p, fe_result** out) {
  return guarded([&] {
    require(m, "model");
    require(p, "params");
    require(out, "out");
    ising::AnnealSampler sampler(ising_of(*m), to_schedule(p->anneal), p->seed);
    *out = new fe_result{enumerate_opt(sampler, p->epsilon, to_options(*p))};
  });
}

void fe_result_free(fe_result* r) { delete r; }

uint64_t fe_result_count(const fe_result* r) { return r ? r->result.solutions.size() : 0; }

double fe_result_theta(const fe_result* r) { return r ? r->result.theta : 0.0; }

uint64_t fe_result_accepted_samples(const fe_result* r) { return r ? r->result.accepted_samples : 0; }

uint64_t fe_result_raw_draws(const fe_result* r) { return r ? r->result.raw_draws : 0; }

int fe_result_budget_capped(const fe_result* r) {
  return r != nullptr && r->result.stop_reason == StopReason::budget_cap;
}

fe_status fe_result_solution(const fe_result* r, uint64_t i, char** bits, double* cost) {
  return guarded([&] {
    require(r, "result");
    if (i >= r->result.solutions.size()) throw std::out_of_range("solution index out of range");
    const auto& s = r->result.solutions[i];
    if (cost) *cost = s.cost;
    if (bits) *bits = dup_string(s.key.to_string());
  });
}

fe_status fe_result_to_json(const fe_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup_string(records::to_json(r->result).dump());
  });
}

fe_status fe_run_experiment_json(const char* config, const char* dimacs, char** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const auto cfg = records::experiment_config_from_json(json::parse(config));
    const auto rec = dimacs ? experiment::run_experiment(cfg, io::parse_graph(dimacs))
                            : experiment::run_experiment(cfg);
    *out = dup_string(records::to_json(rec).dump());
  });
}

fe_status fe_plan_sweep_json(const char* sweep, char** out) {
  return guarded([&] {
    require(sweep, "sweep");
    require(out, "out");
    const auto j = json::parse(sweep);
    if (!j.is_object()) throw std::invalid_argument("sweep: expected a JSON object");
    for (const auto& [key, _] : j.items()) {
      if (key != "sizes" && key != "densities" && key != "instances" && key != "base") {
        throw std::invalid_argument("sweep: unknown key '" + key + "'");
      }
    }
    experiment::SweepConfig s;
    if (j.contains("sizes")) s.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    if (j.contains("densities")) s.densities = j.at("densities").get<std::vector<double>>();
    if (j.contains("instances")) s.instances_per_cell = j.at("instances").get<std::size_t>();
    if (j.contains("base")) s.base = records::experiment_config_from_json(j.at("base"));
    json arr = json::array();
    for (const auto& c : experiment::plan_sweep(s)) {
      json cj = records::to_json(c);
      cj["threads"] = c.threads;
      arr.push_back(cj);
    }
    *out = dup_string(arr.dump());
  });
}

fe_status fe_validate_bounds_json(const char* config, char** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const auto cfg = records::campaign_config_from_json(json::parse(config));
    const auto report = campaigns::validate_bounds(cfg);
    json j = records::to_json(report);
    j["config"] = records::to_json(cfg);
    *out = dup_string(j.dump());
  });
}

fe_status fe_strip_timings_json(const char* text, char** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = dup_string(records::strip_timings(json::parse(text)).dump());
  });
}

fe_status fe_fit_exponential(const double* x, const double* y, size_t count, double* base,
                             double* prefactor, double* r_squared) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    const auto fit = stats::fit_exponential(std::span<const double>(x, count),
                                            std::span<const double>(y, count));
    if (base) *base = fit.base;
    if (prefactor) *prefactor = fit.prefactor;
    if (r_squared) *r_squared = fit.r_squared;
  });
}

}  // extern "C"
