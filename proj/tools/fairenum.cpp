// fairenum command-line frontend. Talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairenum/fairenum.h"

namespace {

using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitChecksFailed = 3;

struct ApiError : std::runtime_error {
  fe_status status;
  ApiError(fe_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(fe_status s, const char* call) {
  if (s != FE_OK) {
    throw ApiError(s, std::string(call) + ": " + fe_status_name(s) + ": " + fe_last_error());
  }
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::unique_ptr<char, decltype(&fe_string_free)> guard(s, &fe_string_free);
  return s ? std::string(s) : std::string();
}

struct GraphDeleter {
  void operator()(fe_graph* g) const { fe_graph_free(g); }
};
struct ModelDeleter {
  void operator()(fe_model* m) const { fe_model_free(m); }
};
struct ResultDeleter {
  void operator()(fe_result* r) const { fe_result_free(r); }
};
using GraphPtr = std::unique_ptr<fe_graph, GraphDeleter>;
using ModelPtr = std::unique_ptr<fe_model, ModelDeleter>;
using ResultPtr = std::unique_ptr<fe_result, ResultDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Records go to --out (appending) or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::app);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  void line(const std::string& s) {
    std::ostream& os = file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout;
    os << s << '\n';
    os.flush();
  }

 private:
  std::ofstream file_;
};

struct AnnealOpts {
  std::uint64_t sweeps = 1000;
  double beta0 = 0.1;
  double beta1 = 10.0;
  std::string interpolation = "geometric";
  bool random_order = false;

  void add(CLI::App* app) {
    app->add_option("--sweeps", sweeps, "Metropolis sweeps per anneal")->capture_default_str();
    app->add_option("--beta0", beta0, "Initial inverse temperature")->capture_default_str();
    app->add_option("--beta1", beta1, "Final inverse temperature")->capture_default_str();
    app->add_option("--schedule", interpolation, "Inverse-temperature interpolation")
        ->check(CLI::IsMember({"geometric", "linear"}))
        ->capture_default_str();
    app->add_flag("--random-order", random_order, "Visit spins in random order each sweep");
  }
  json to_json() const {
    return {{"sweeps", sweeps},
            {"beta_initial", beta0},
            {"beta_final", beta1},
            {"interpolation", interpolation},
            {"order", random_order ? "random" : "sequential"}};
  }
  fe_anneal_params to_params() const {
    return {sweeps, beta0, beta1, interpolation == "linear", random_order};
  }
};

struct GraphSource {
  std::string path;
  std::uint64_t n = 0;
  double density = 0.5;
  std::uint64_t graph_seed = 0;

  void add(CLI::App* app, bool with_file = true) {
    if (with_file) app->add_option("--graph", path, "DIMACS graph file")->check(CLI::ExistingFile);
    app->add_option("--n", n, "Vertices of a generated Erdos-Renyi graph");
    app->add_option("--density", density, "Edge density of the generated graph")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app->add_option("--graph-seed", graph_seed, "Seed of the generated graph")->capture_default_str();
  }
  GraphPtr load() const {
    fe_graph* g = nullptr;
    if (!path.empty()) {
      check(fe_graph_parse(read_file(path).c_str(), &g), "fe_graph_parse");
    } else {
      if (n == 0) throw CLI::ValidationError("need --graph or --n");
      check(fe_graph_erdos_renyi(n, density, graph_seed, &g), "fe_graph_erdos_renyi");
    }
    return GraphPtr(g);
  }
};

struct Common {
  double epsilon = 0.01;
  double penalty = 2.0;
  std::uint64_t runs = 1;
  std::uint64_t seed = 0;
  std::string out;
  double exact_budget = 60.0;
  std::uint64_t budget_cap = 0;
  unsigned threads = 1;
  AnnealOpts anneal;

  void add_enum(CLI::App* app, std::uint64_t default_runs) {
    runs = default_runs;
    app->add_option("--epsilon", epsilon, "Failure tolerance")->capture_default_str();
    app->add_option("--penalty", penalty, "Clique QUBO penalty A (> 1)")->capture_default_str();
    app->add_option("--runs", runs, "Independent enumeration runs")->capture_default_str();
    app->add_option("--budget-cap", budget_cap, "Raw draws per run before giving up (0 = none)")
        ->capture_default_str();
    app->add_option("--exact-budget-seconds", exact_budget,
                    "Time allowed for the reference enumerator (<= 0: unlimited)")
        ->capture_default_str();
    app->add_option("--threads", threads, "Worker threads")->capture_default_str();
    anneal.add(app);
  }
  void add_io(CLI::App* app) {
    app->add_option("--seed", seed, "Master seed")->capture_default_str();
    app->add_option("--out", out, "Append records to this file instead of stdout");
  }
  json experiment_config() const {
    return {{"epsilon", epsilon},
            {"penalty", penalty},
            {"runs", runs},
            {"master_seed", seed},
            {"exact_budget_seconds", exact_budget},
            {"budget_cap", budget_cap},
            {"threads", threads},
            {"schedule", anneal.to_json()}};
  }
};

void print_experiment_summary(const json& rec) {
  const auto& s = rec.at("summary");
  const auto& ref = rec.at("reference");
  std::fprintf(stderr, "%-24s |V|=%-3llu D=%.3f  opt=%-3llu size=%-2llu %-10s  %3llu/%-3llu  p=%.4f  CI=[%.4f, %.4f]  cov=%.4f  %s%s\n",
               rec.at("problem_id").get<std::string>().c_str(),
               rec.at("graph").at("n_vertices").get<unsigned long long>(),
               rec.at("graph").at("density").get<double>(),
               ref.at("n_optimal").get<unsigned long long>(),
               ref.at("max_clique_size").get<unsigned long long>(),
               ref.at("kind").get<std::string>().c_str(),
               s.at("successes").get<unsigned long long>(), s.at("runs").get<unsigned long long>(),
               s.at("p_value_vs_target").get<double>(), s.at("ci_low").get<double>(),
               s.at("ci_high").get<double>(), s.at("mean_coverage").get<double>(),
               rec.at("fairness_category").get<std::string>().c_str(),
               s.at("incompatible").get<bool>() ? "  INCOMPATIBLE" : "");
}

int cmd_enumerate(const Common& c, const GraphSource& graph, const std::string& model_path, bool trace) {
  Sink sink(c.out);
  if (!model_path.empty()) {
    fe_model* raw = nullptr;
    check(fe_model_parse(read_file(model_path).c_str(), &raw), "fe_model_parse");
    ModelPtr model(raw);
    fe_enum_params p;
    fe_enum_params_default(&p);
    p.epsilon = c.epsilon;
    p.anneal = c.anneal.to_params();
    p.budget_cap = c.budget_cap;
    p.record_trace = trace;
    for (std::uint64_t r = 0; r < c.runs; ++r) {
      p.seed = fe_derive_seed(c.seed, 0, r);
      fe_result* res = nullptr;
      check(fe_enumerate_model(model.get(), &p, &res), "fe_enumerate_model");
      ResultPtr result(res);
      char* text = nullptr;
      check(fe_result_to_json(result.get(), &text), "fe_result_to_json");
      json j = json::parse(take(text));
      j["run"] = r;
      j["seed"] = p.seed;
      j["source"] = model_path;
      sink.line(j.dump());
    }
    return 0;
  }

  json cfg = c.experiment_config();
  std::string dimacs;
  if (!graph.path.empty()) {
    dimacs = read_file(graph.path);
    cfg["problem_id"] = graph.path;
  } else {
    if (graph.n == 0) throw CLI::ValidationError("need --graph, --model or --n");
    cfg["n_vertices"] = graph.n;
    cfg["density"] = graph.density;
    cfg["graph_seed"] = graph.graph_seed;
  }
  char* out = nullptr;
  check(fe_run_experiment_json(cfg.dump().c_str(), dimacs.empty() ? nullptr : dimacs.c_str(), &out),
        "fe_run_experiment_json");
  const auto text = take(out);
  sink.line(text);
  print_experiment_summary(json::parse(text));
  return 0;
}

void print_fit(const std::vector<json>& records) {
  // Runtime trend per density: mean wall time of successful runs against |V|.
  std::map<double, std::pair<std::vector<double>, std::vector<double>>> series;
  for (const auto& r : records) {
    const double d = r.at("config").at("density").get<double>();
    const double t = r.at("timing").at("mean_successful_run_seconds").get<double>();
    series[d].first.push_back(r.at("graph").at("n_vertices").get<double>());
    series[d].second.push_back(t);
  }
  for (const auto& [d, xy] : series) {
    double base = 0, pre = 0, r2 = 0;
    if (fe_fit_exponential(xy.first.data(), xy.second.data(), xy.first.size(), &base, &pre, &r2) != FE_OK) {
      std::fprintf(stderr, "fit D=%.2f: %s\n", d, fe_last_error());
      continue;
    }
    std::fprintf(stderr, "fit D=%.2f: t(|V|) ~ %.3g * %.4f^|V|  (exponent %.4f per vertex, R^2=%.3f, %zu points)\n",
                 d, pre, base, std::log(base), r2, xy.first.size());
  }
}

int cmd_bench(const Common& c, const std::vector<std::uint64_t>& sizes,
              const std::vector<double>& densities, std::uint64_t instances) {
  json base = c.experiment_config();
  json sweep = {{"sizes", sizes}, {"densities", densities}, {"instances", instances}, {"base", base}};
  char* planned = nullptr;
  check(fe_plan_sweep_json(sweep.dump().c_str(), &planned), "fe_plan_sweep_json");
  const json plan = json::parse(take(planned));

  // Resume: skip problems that already have a record in --out.
  std::vector<json> done;
  std::set<std::string> done_ids;
  if (!c.out.empty()) {
    std::ifstream in(c.out);
    for (std::string l; std::getline(in, l);) {
      if (l.empty()) continue;
      json j = json::parse(l, nullptr, false);
      if (j.is_discarded() || !j.is_object() || j.value("record", "") != "experiment") continue;
      done_ids.insert(j.at("problem_id").get<std::string>());
      done.push_back(std::move(j));
    }
  }

  Sink sink(c.out);
  std::vector<json> records;
  for (const auto& cfg : plan) {
    const auto id = cfg.at("problem_id").get<std::string>();
    if (done_ids.contains(id)) {
      std::fprintf(stderr, "%-24s already recorded, skipping\n", id.c_str());
      continue;
    }
    char* out = nullptr;
    check(fe_run_experiment_json(cfg.dump().c_str(), nullptr, &out), "fe_run_experiment_json");
    const auto text = take(out);
    sink.line(text);
    json rec = json::parse(text);
    print_experiment_summary(rec);
    records.push_back(std::move(rec));
  }

  for (auto& r : done) records.push_back(std::move(r));
  std::uint64_t incompatible = 0;
  std::map<std::string, std::uint64_t> categories;
  for (const auto& r : records) {
    incompatible += r.at("summary").at("incompatible").get<bool>();
    ++categories[r.at("fairness_category").get<std::string>()];
  }
  std::fprintf(stderr, "%zu instances, %llu incompatible with success probability 0.99;", records.size(),
               static_cast<unsigned long long>(incompatible));
  for (const auto& [k, v] : categories) std::fprintf(stderr, " %s=%llu", k.c_str(), static_cast<unsigned long long>(v));
  std::fprintf(stderr, "\n");
  if (records.size() >= 2) print_fit(records);
  return 0;
}

int cmd_validate_bounds(const Common& c, std::uint64_t coupon_trials, std::uint64_t guarantee_trials) {
  json cfg = {{"seed", c.seed},
              {"coupon_trials", coupon_trials},
              {"guarantee_trials", guarantee_trials},
              {"threads", c.threads}};
  char* out = nullptr;
  check(fe_validate_bounds_json(cfg.dump().c_str(), &out), "fe_validate_bounds_json");
  const auto text = take(out);
  Sink(c.out).line(text);
  const json report = json::parse(text);

  for (const char* key : {"complete_collection", "partial_collection"}) {
    for (const auto& t : report.at(key)) {
      std::fprintf(stderr, "%-20s n=%-3llu m=%-3llu eps=%.2f deadline=%-4llu tail=%.5f bound=%.3g  %s\n", key,
                   t.at("n").get<unsigned long long>(), t.at("m").get<unsigned long long>(),
                   t.at("epsilon").get<double>(), t.at("deadline").get<unsigned long long>(),
                   t.at("empirical_tail").get<double>(), t.at("bound").get<double>(),
                   t.at("within_bound").get<bool>() ? "ok" : "VIOLATED");
    }
  }
  for (const char* key : {"csp_enumeration", "opt_enumeration"}) {
    for (const auto& t : report.at(key)) {
      std::fprintf(stderr, "%-20s %-28s failures=%llu/%llu rate=%.5f  %s\n", key,
                   t.at("label").get<std::string>().c_str(), t.at("failures").get<unsigned long long>(),
                   t.at("trials").get<unsigned long long>(), t.at("failure_rate").get<double>(),
                   t.at("below_epsilon").get<bool>() ? "ok" : "VIOLATED");
    }
  }
  return report.at("all_pass").get<bool>() ? 0 : kExitChecksFailed;
}

int cmd_gen_graph(const GraphSource& src, const std::string& out, bool as_qubo, double penalty) {
  GraphPtr g = src.load();
  char* text = nullptr;
  if (as_qubo) {
    check(fe_graph_clique_qubo(g.get(), penalty, &text), "fe_graph_clique_qubo");
  } else {
    check(fe_graph_to_dimacs(g.get(), &text), "fe_graph_to_dimacs");
  }
  const auto s = take(text);
  if (out.empty()) {
    std::cout << s;
  } else {
    std::ofstream f(out, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + out + " for writing");
    f << s;
  }
  return 0;
}

int cmd_exact(const GraphSource& src, const std::string& out, double budget) {
  GraphPtr g = src.load();
  char* text = nullptr;
  check(fe_graph_max_cliques_json(g.get(), budget, &text), "fe_graph_max_cliques_json");
  Sink(out).line(take(text));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate all optimal solutions with a tolerance guarantee"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fe_version()));

  Common enum_opts;
  GraphSource enum_graph;
  std::string model_path;
  bool trace = false;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the optimal solutions of one instance");
  enum_opts.add_enum(enumerate, 1);
  enum_opts.add_io(enumerate);
  enum_graph.add(enumerate);
  enumerate->add_option("--model", model_path, "QUBO or Ising model file")->check(CLI::ExistingFile);
  enumerate->add_flag("--trace", trace, "Include the draw-by-draw trace (model input)");

  Common bench_opts;
  std::vector<std::uint64_t> sizes{10, 20, 30, 40, 50, 60};
  std::vector<double> densities{0.25, 0.5, 0.75};
  std::uint64_t instances = 1;
  auto* bench = app.add_subcommand("bench", "Erdos-Renyi sweep; one experiment record per instance");
  bench_opts.add_enum(bench, 100);
  bench_opts.add_io(bench);
  bench->add_option("--sizes", sizes, "Vertex counts")->delimiter(',')->capture_default_str();
  bench->add_option("--densities", densities, "Edge densities")->delimiter(',')->capture_default_str();
  bench->add_option("--instances", instances, "Graphs per (size, density) cell")->capture_default_str();

  Common bounds_opts;
  std::uint64_t coupon_trials = 100000;
  std::uint64_t guarantee_trials = 20000;
  auto* validate = app.add_subcommand("validate-bounds", "Monte Carlo checks of the tail bounds and guarantees");
  bounds_opts.add_io(validate);
  validate->add_option("--threads", bounds_opts.threads, "Worker threads")->capture_default_str();
  validate->add_option("--coupon-trials", coupon_trials, "Trials per collection-time check")->capture_default_str();
  validate->add_option("--guarantee-trials", guarantee_trials, "Trials per enumeration check")->capture_default_str();

  GraphSource gen_src;
  std::string gen_out;
  bool as_qubo = false;
  double gen_penalty = 2.0;
  auto* gen = app.add_subcommand("gen-graph", "Write an Erdos-Renyi graph in DIMACS format");
  gen_src.add(gen, false);
  gen->get_option("--n")->required();
  gen->add_option("--seed", gen_src.graph_seed, "Graph seed (same as --graph-seed)");
  gen->add_option("--out", gen_out, "Output file (default stdout)");
  gen->add_flag("--qubo", as_qubo, "Write the max-clique QUBO instead");
  gen->add_option("--penalty", gen_penalty, "QUBO penalty A (> 1)")->capture_default_str();

  GraphSource exact_src;
  std::string exact_out;
  double exact_budget = 0.0;
  auto* exact = app.add_subcommand("exact", "All maximum cliques by exhaustive branch and bound");
  exact_src.add(exact);
  exact->add_option("--out", exact_out, "Append the record to this file");
  exact->add_option("--exact-budget-seconds", exact_budget, "Give up after this long (<= 0: unlimited)")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return cmd_enumerate(enum_opts, enum_graph, model_path, trace);
    if (*bench) return cmd_bench(bench_opts, sizes, densities, instances);
    if (*validate) return cmd_validate_bounds(bounds_opts, coupon_trials, guarantee_trials);
    if (*gen) return cmd_gen_graph(gen_src, gen_out, as_qubo, gen_penalty);
    if (*exact) return cmd_exact(exact_src, exact_out, exact_budget);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fairenum: %s\n", e.what());
    return kExitError;
  }
  return 0;
}
