#include "fairenum/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace fairenum::ising {
namespace {

IndexPair ordered_pair(std::size_t i, std::size_t j, std::size_t n, const char* what) {
  if (i >= n || j >= n) {
    throw std::out_of_range(std::string(what) + ": index out of range");
  }
  if (i == j) throw std::invalid_argument(std::string(what) + ": self-interaction");
  if (i > j) std::swap(i, j);
  return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
}

// Symmetric CSR view of the couplings.
struct Adjacency {
  std::vector<std::size_t> row_start;
  std::vector<std::uint32_t> neighbor;
  std::vector<double> weight;
};

Adjacency build_adjacency(const IsingModel& model) {
  const std::size_t n = model.n_spins();
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [ij, _] : model.couplings()) {
    ++degree[ij.first];
    ++degree[ij.second];
  }
  Adjacency adj;
  adj.row_start.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) adj.row_start[i + 1] = adj.row_start[i] + degree[i];
  adj.neighbor.resize(adj.row_start[n]);
  adj.weight.resize(adj.row_start[n]);
  std::vector<std::size_t> fill(adj.row_start.begin(), adj.row_start.end() - 1);
  for (const auto& [ij, value] : model.couplings()) {
    adj.neighbor[fill[ij.first]] = ij.second;
    adj.weight[fill[ij.first]++] = value;
    adj.neighbor[fill[ij.second]] = ij.first;
    adj.weight[fill[ij.second]++] = value;
  }
  return adj;
}

}  // namespace

IsingModel::IsingModel(std::size_t n_spins) : fields_(n_spins, 0.0) {
  if (n_spins == 0) throw std::invalid_argument("IsingModel: at least one spin required");
}

void IsingModel::add_coupling(std::size_t i, std::size_t j, double value) {
  couplings_[ordered_pair(i, j, n_spins(), "IsingModel::add_coupling")] += value;
}

void IsingModel::add_field(std::size_t i, double value) {
  if (i >= n_spins()) throw std::out_of_range("IsingModel::add_field: index out of range");
  fields_[i] += value;
}

QuboModel::QuboModel(std::size_t n_vars) : linear_(n_vars, 0.0) {
  if (n_vars == 0) throw std::invalid_argument("QuboModel: at least one variable required");
}

void QuboModel::add_quadratic(std::size_t u, std::size_t v, double value) {
  quadratic_[ordered_pair(u, v, n_vars(), "QuboModel::add_quadratic")] += value;
}

void QuboModel::add_linear(std::size_t v, double value) {
  if (v >= n_vars()) throw std::out_of_range("QuboModel::add_linear: index out of range");
  linear_[v] += value;
}

SpinConfig::SpinConfig(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
  for (auto s : spins_) {
    if (s != 1 && s != -1) throw std::invalid_argument("SpinConfig: spins must be +1 or -1");
  }
}

SolutionKey spins_to_bits(const SpinConfig& config) {
  SolutionKey key(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (config[i] < 0) key.set(i);
  }
  return key;
}

SpinConfig bits_to_spins(const SolutionKey& bits) {
  std::vector<std::int8_t> spins(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) spins[i] = bits.test(i) ? -1 : 1;
  return SpinConfig(std::move(spins));
}

SolutionKey key_from_mask(std::uint64_t mask, std::size_t n) {
  SolutionKey key(n);
  for (std::size_t i = 0; i < n && i < 64; ++i) {
    if ((mask >> i) & 1U) key.set(i);
  }
  return key;
}

void AnnealSchedule::validate() const {
  if (sweeps == 0) throw std::invalid_argument("AnnealSchedule: sweeps must be positive");
  if (!(beta_initial > 0.0) || !std::isfinite(beta_initial)) {
    throw std::invalid_argument("AnnealSchedule: beta_initial must be positive");
  }
  if (!(beta_final >= beta_initial) || !std::isfinite(beta_final)) {
    throw std::invalid_argument("AnnealSchedule: beta_final must be >= beta_initial");
  }
}

double AnnealSchedule::beta_at(std::uint64_t sweep) const {
  if (sweeps <= 1) return beta_final;
  const double t = static_cast<double>(sweep) / static_cast<double>(sweeps - 1);
  if (interpolation == Interpolation::linear) {
    return beta_initial + (beta_final - beta_initial) * t;
  }
  return beta_initial * std::pow(beta_final / beta_initial, t);
}

double ising_energy(const IsingModel& model, const SpinConfig& config) {
  if (config.size() != model.n_spins()) {
    throw std::invalid_argument("ising_energy: configuration length differs from model size");
  }
  double e = 0.0;
  for (const auto& [ij, j] : model.couplings()) {
    e -= j * config[ij.first] * config[ij.second];
  }
  const auto& h = model.fields();
  for (std::size_t i = 0; i < h.size(); ++i) e -= h[i] * config[i];
  return e + model.offset();
}

double qubo_energy(const QuboModel& model, const SolutionKey& assignment) {
  if (assignment.size() != model.n_vars()) {
    throw std::invalid_argument("qubo_energy: assignment length differs from model size");
  }
  double e = 0.0;
  const auto& lin = model.linear();
  for (std::size_t v = 0; v < lin.size(); ++v) {
    if (assignment.test(v)) e += lin[v];
  }
  for (const auto& [uv, q] : model.quadratic()) {
    if (assignment.test(uv.first) && assignment.test(uv.second)) e += q;
  }
  return e + model.offset();
}

IsingModel qubo_to_ising(const QuboModel& model) {
  // l x = l/2 - (l/2) s ;  q x_u x_v = q/4 (1 - s_u - s_v + s_u s_v)
  IsingModel out(model.n_vars());
  double offset = model.offset();
  const auto& lin = model.linear();
  for (std::size_t v = 0; v < lin.size(); ++v) {
    if (lin[v] == 0.0) continue;
    out.add_field(v, lin[v] / 2.0);
    offset += lin[v] / 2.0;
  }
  for (const auto& [uv, q] : model.quadratic()) {
    const double quarter = q / 4.0;
    out.add_coupling(uv.first, uv.second, -quarter);
    out.add_field(uv.first, quarter);
    out.add_field(uv.second, quarter);
    offset += quarter;
  }
  out.add_offset(offset);
  return out;
}

GroundStates ground_states_exhaustive(const IsingModel& model) {
  const std::size_t n = model.n_spins();
  if (n > kExhaustiveSpinCap) {
    throw std::length_error("ground_states_exhaustive: more than " +
                            std::to_string(kExhaustiveSpinCap) + " spins");
  }
  double scale = 1.0 + std::abs(model.offset());
  for (const auto& [_, j] : model.couplings()) scale += std::abs(j);
  for (double h : model.fields()) scale += std::abs(h);
  const double tol = 1e-9 * scale;

  const auto adj = build_adjacency(model);
  std::vector<std::int8_t> spins(n, 1);
  std::vector<double> local(model.fields());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = adj.row_start[i]; k < adj.row_start[i + 1]; ++k) {
      local[i] += adj.weight[k];
    }
  }
  double energy = ising_energy(model, SpinConfig(spins));

  // Gray-code walk; each step flips one spin and updates the energy in O(degree).
  struct Candidate {
    std::uint64_t mask;
    double energy;
  };
  std::vector<Candidate> candidates{{0, energy}};
  double best = energy;
  std::uint64_t mask = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto i = static_cast<std::size_t>(std::countr_zero(g));
    energy += 2.0 * spins[i] * local[i];
    spins[i] = static_cast<std::int8_t>(-spins[i]);
    mask ^= std::uint64_t{1} << i;
    const double delta = 2.0 * spins[i];
    for (std::size_t k = adj.row_start[i]; k < adj.row_start[i + 1]; ++k) {
      local[adj.neighbor[k]] += adj.weight[k] * delta;
    }
    if (energy > best + tol) continue;
    if (energy < best) {
      best = energy;
      std::erase_if(candidates, [&](const Candidate& c) { return c.energy > best + tol; });
    }
    candidates.push_back({mask, energy});
  }

  // Re-evaluate the survivors directly so the reported energy carries no drift.
  GroundStates out;
  std::vector<std::pair<SpinConfig, double>> exact;
  exact.reserve(candidates.size());
  for (const auto& c : candidates) {
    auto config = bits_to_spins(key_from_mask(c.mask, n));
    const double e = ising_energy(model, config);
    exact.emplace_back(std::move(config), e);
  }
  out.energy = exact.front().second;
  for (const auto& [_, e] : exact) out.energy = std::min(out.energy, e);
  for (auto& [config, e] : exact) {
    if (e <= out.energy + tol) out.states.push_back(std::move(config));
  }
  std::sort(out.states.begin(), out.states.end());
  return out;
}

Annealer::Annealer(const IsingModel& model, AnnealSchedule schedule)
    : schedule_(schedule), fields_(model.fields()) {
  schedule_.validate();
  auto adj = build_adjacency(model);
  row_start_ = std::move(adj.row_start);
  neighbor_ = std::move(adj.neighbor);
  weight_ = std::move(adj.weight);
  betas_.reserve(schedule_.sweeps);
  for (std::uint64_t s = 0; s < schedule_.sweeps; ++s) betas_.push_back(schedule_.beta_at(s));
}

SpinConfig Annealer::anneal(Rng& rng) const {
  const std::size_t n = fields_.size();
  std::vector<std::int8_t> spins(n);
  for (std::size_t i = 0; i < n; ++i) spins[i] = (rng() >> 63) ? -1 : 1;

  // local[i] = h_i + sum_j J_ij s_j; flipping s_i changes H by 2 s_i local[i].
  std::vector<double> local(fields_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
      local[i] += weight_[k] * spins[neighbor_[k]];
    }
  }

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  const bool shuffle = schedule_.order == ProposalOrder::random;

  for (double beta : betas_) {
    if (shuffle) {
      for (std::size_t k = n; k > 1; --k) {
        std::swap(order[k - 1], order[uniform_index(rng, k)]);
      }
    }
    for (std::uint32_t i : order) {
      const double delta_e = 2.0 * spins[i] * local[i];
      if (delta_e > 0.0 && uniform_unit(rng) >= std::exp(-beta * delta_e)) continue;
      spins[i] = static_cast<std::int8_t>(-spins[i]);
      const double change = 2.0 * spins[i];
      for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
        local[neighbor_[k]] += weight_[k] * change;
      }
    }
  }
  return SpinConfig(std::move(spins));
}

SpinConfig sa_sample(const IsingModel& model, const AnnealSchedule& schedule,
                     std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return Annealer(model, schedule).anneal(rng);
}

AnnealSampler::AnnealSampler(IsingModel model, const AnnealSchedule& schedule, std::uint64_t seed)
    : model_(std::move(model)), annealer_(model_, schedule), rng_(make_rng(seed)) {}

Solution AnnealSampler::draw() {
  const SpinConfig config = annealer_.anneal(rng_);
  return {spins_to_bits(config), ising_energy(model_, config)};
}

}  // namespace fairenum::ising
