#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fairenum/random.hpp"
#include "fairenum/sampler.hpp"
#include "fairenum/solution.hpp"

namespace fairenum::ising {

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;  // always first < second

// H(s) = -sum_{i<j} J_ij s_i s_j - sum_i h_i s_i + offset, s_i in {-1, +1}.
class IsingModel {
 public:
  explicit IsingModel(std::size_t n_spins);

  std::size_t n_spins() const { return fields_.size(); }

  // Both accumulate into the stored coefficient. Index order does not matter;
  // i == j is rejected.
  void add_coupling(std::size_t i, std::size_t j, double value);
  void add_field(std::size_t i, double value);
  void add_offset(double value) { offset_ += value; }

  const std::map<IndexPair, double>& couplings() const { return couplings_; }
  const std::vector<double>& fields() const { return fields_; }
  double offset() const { return offset_; }

  friend bool operator==(const IsingModel&, const IsingModel&) = default;

 private:
  std::map<IndexPair, double> couplings_;
  std::vector<double> fields_;
  double offset_ = 0.0;
};

// E(x) = sum_v linear_v x_v + sum_{u<v} quadratic_uv x_u x_v + offset, x in {0,1}.
class QuboModel {
 public:
  explicit QuboModel(std::size_t n_vars);

  std::size_t n_vars() const { return linear_.size(); }

  void add_quadratic(std::size_t u, std::size_t v, double value);
  void add_linear(std::size_t v, double value);
  void add_offset(double value) { offset_ += value; }

  const std::map<IndexPair, double>& quadratic() const { return quadratic_; }
  const std::vector<double>& linear() const { return linear_; }
  double offset() const { return offset_; }

  friend bool operator==(const QuboModel&, const QuboModel&) = default;

 private:
  std::map<IndexPair, double> quadratic_;
  std::vector<double> linear_;
  double offset_ = 0.0;
};

class SpinConfig {
 public:
  SpinConfig() = default;
  explicit SpinConfig(std::vector<std::int8_t> spins);  // entries must be +-1

  std::size_t size() const { return spins_.size(); }
  std::int8_t operator[](std::size_t i) const { return spins_[i]; }
  const std::vector<std::int8_t>& spins() const { return spins_; }

  friend auto operator<=>(const SpinConfig&, const SpinConfig&) = default;

 private:
  std::vector<std::int8_t> spins_;
};

// sigma = 1 - 2x: bit 0 <-> spin +1, bit 1 <-> spin -1.
SolutionKey spins_to_bits(const SpinConfig& config);
SpinConfig bits_to_spins(const SolutionKey& bits);
// Low n bits of mask, bit i of the mask becoming variable i.
SolutionKey key_from_mask(std::uint64_t mask, std::size_t n);

enum class Interpolation { geometric, linear };
enum class ProposalOrder { sequential, random };

struct AnnealSchedule {
  std::uint64_t sweeps = 1000;
  double beta_initial = 0.1;
  double beta_final = 10.0;
  Interpolation interpolation = Interpolation::geometric;
  ProposalOrder order = ProposalOrder::sequential;

  // Throws std::invalid_argument unless sweeps >= 1 and
  // beta_final >= beta_initial > 0.
  void validate() const;
  // Inverse temperature used during sweep `sweep` (0-based).
  double beta_at(std::uint64_t sweep) const;
};

double ising_energy(const IsingModel& model, const SpinConfig& config);
double qubo_energy(const QuboModel& model, const SolutionKey& assignment);

// Exact image of a QUBO under x = (1 - sigma)/2.
IsingModel qubo_to_ising(const QuboModel& model);

inline constexpr std::size_t kExhaustiveSpinCap = 24;

struct GroundStates {
  std::vector<SpinConfig> states;  // sorted
  double energy = 0.0;
};

// All minimum-energy configurations. Energies within 1e-9 (relative to the
// coefficient scale) of the minimum count as ties. Throws std::length_error
// above kExhaustiveSpinCap spins.
GroundStates ground_states_exhaustive(const IsingModel& model);

// Single-spin-flip Metropolis annealer over a compiled adjacency structure.
class Annealer {
 public:
  Annealer(const IsingModel& model, AnnealSchedule schedule);

  // One anneal from a uniformly random start drawn from rng.
  SpinConfig anneal(Rng& rng) const;

  const AnnealSchedule& schedule() const { return schedule_; }
  std::size_t n_spins() const { return fields_.size(); }

 private:
  AnnealSchedule schedule_;
  std::vector<double> fields_;
  std::vector<std::size_t> row_start_;
  std::vector<std::uint32_t> neighbor_;
  std::vector<double> weight_;
  std::vector<double> betas_;
};

SpinConfig sa_sample(const IsingModel& model, const AnnealSchedule& schedule,
                     std::uint64_t seed);

// Unconstrained sampler over all spin configurations: each draw is one anneal,
// returned as bits (spin -1 -> 1) with cost equal to the Ising energy.
class AnnealSampler final : public Sampler {
 public:
  AnnealSampler(IsingModel model, const AnnealSchedule& schedule, std::uint64_t seed);

  Solution draw() override;

 private:
  IsingModel model_;
  Annealer annealer_;
  Rng rng_;
};

}  // namespace fairenum::ising
