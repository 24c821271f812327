#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "doctest.h"
#include "fairenum/ising.hpp"
#include "fairenum/maxclique.hpp"
#include "fairenum/random.hpp"
#include "fairenum/stats.hpp"

using namespace fairenum;
using namespace fairenum::ising;

namespace {

SpinConfig spins(std::initializer_list<int> v) {
  std::vector<std::int8_t> s;
  for (int x : v) s.push_back(static_cast<std::int8_t>(x));
  return SpinConfig(s);
}

// Direct evaluation of the Ising energy, used as a cross-check.
double energy_by_hand(const IsingModel& m, const SpinConfig& s) {
  double e = m.offset();
  for (const auto& [ij, j] : m.couplings()) e -= j * s[ij.first] * s[ij.second];
  for (std::size_t i = 0; i < m.n_spins(); ++i) e -= m.fields()[i] * s[i];
  return e;
}

QuboModel random_qubo(std::size_t n, Rng& rng) {
  QuboModel q(n);
  for (std::size_t v = 0; v < n; ++v) q.add_linear(v, uniform_unit(rng) * 4.0 - 2.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < 0.6) q.add_quadratic(u, v, uniform_unit(rng) * 4.0 - 2.0);
    }
  }
  q.add_offset(uniform_unit(rng) - 0.5);
  return q;
}

}  // namespace

TEST_CASE("ising energy examples") {
  IsingModel pair(2);
  pair.add_coupling(0, 1, 1.0);
  CHECK(ising_energy(pair, spins({1, 1})) == -1.0);
  CHECK(ising_energy(pair, spins({1, -1})) == 1.0);

  IsingModel zero(3);
  zero.add_offset(2.5);
  for (int a : {-1, 1}) {
    for (int b : {-1, 1}) {
      for (int c : {-1, 1}) CHECK(ising_energy(zero, spins({a, b, c})) == 2.5);
    }
  }

  IsingModel single(1);
  single.add_field(0, 1.0);
  CHECK(ising_energy(single, spins({-1})) == 1.0);
  CHECK(ising_energy(single, spins({1})) == -1.0);

  CHECK_THROWS_AS(ising_energy(pair, spins({1})), std::invalid_argument);
}

TEST_CASE("coupling storage is order independent") {
  IsingModel a(3), b(3);
  a.add_coupling(0, 2, 1.5);
  a.add_coupling(1, 2, -0.5);
  b.add_coupling(2, 1, -0.5);
  b.add_coupling(2, 0, 1.0);
  b.add_coupling(0, 2, 0.5);
  CHECK(a == b);
  CHECK(ising_energy(a, spins({1, -1, 1})) == ising_energy(b, spins({1, -1, 1})));
  CHECK_THROWS_AS(a.add_coupling(1, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(a.add_coupling(0, 3, 1.0), std::out_of_range);
  CHECK_THROWS_AS(spins({1, 0}), std::invalid_argument);
}

TEST_CASE("qubo energy examples") {
  QuboModel one(1);
  one.add_linear(0, -1.0);
  CHECK(qubo_energy(one, SolutionKey::from_string("1")) == -1.0);

  QuboModel q(3);
  q.add_offset(4.0);
  q.add_linear(1, 3.0);
  CHECK(qubo_energy(q, SolutionKey::from_string("000")) == 4.0);
  CHECK_THROWS_AS(qubo_energy(q, SolutionKey::from_string("00")), std::invalid_argument);

  clique::Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  CHECK(qubo_energy(clique::max_clique_qubo(k3, 2.0), SolutionKey::from_string("111")) == -3.0);
}

TEST_CASE("qubo to ising conversion") {
  QuboModel one(1);
  one.add_linear(0, 1.0);
  const auto m = qubo_to_ising(one);
  CHECK(m.fields()[0] == 0.5);
  CHECK(m.offset() == 0.5);
  CHECK(m.couplings().empty());

  const auto z = qubo_to_ising(QuboModel(4));
  CHECK(z == IsingModel(4));

  // Spin convention: bit 0 <-> +1.
  CHECK(spins_to_bits(spins({1, -1, -1})).to_string() == "011");
  CHECK(bits_to_spins(SolutionKey::from_string("100")) == spins({-1, 1, 1}));

  Rng rng = make_rng(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + uniform_index(rng, 10);
    const auto q = random_qubo(n, rng);
    const auto im = qubo_to_ising(q);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      const auto x = key_from_mask(mask, n);
      const auto s = bits_to_spins(x);
      REQUIRE(std::abs(qubo_energy(q, x) - ising_energy(im, s)) <= 1e-9);
      REQUIRE(std::abs(ising_energy(im, s) - energy_by_hand(im, s)) <= 1e-12);
    }
  }
}

TEST_CASE("exhaustive ground states") {
  IsingModel pair(2);
  pair.add_coupling(0, 1, 1.0);
  auto g = ground_states_exhaustive(pair);
  CHECK(g.energy == -1.0);
  CHECK(g.states == std::vector<SpinConfig>{spins({-1, -1}), spins({1, 1})});

  IsingModel single(1);
  single.add_field(0, 1.0);
  g = ground_states_exhaustive(single);
  CHECK(g.energy == -1.0);
  CHECK(g.states == std::vector<SpinConfig>{spins({1})});

  IsingModel tri(3);
  tri.add_coupling(0, 1, -1.0);
  tri.add_coupling(1, 2, -1.0);
  tri.add_coupling(0, 2, -1.0);
  g = ground_states_exhaustive(tri);
  CHECK(g.energy == -1.0);
  CHECK(g.states.size() == 6);

  CHECK_THROWS_AS(ground_states_exhaustive(IsingModel(kExhaustiveSpinCap + 1)), std::length_error);
}

TEST_CASE("ground states agree with a plain scan") {
  Rng rng = make_rng(77);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + uniform_index(rng, 10);
    IsingModel m(n);
    for (std::size_t i = 0; i < n; ++i) m.add_field(i, static_cast<double>(uniform_index(rng, 5)) - 2.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m.add_coupling(i, j, static_cast<double>(uniform_index(rng, 3)) - 1.0);
    }
    double best = INFINITY;
    std::vector<SpinConfig> states;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      const auto s = bits_to_spins(key_from_mask(mask, n));
      const double e = energy_by_hand(m, s);
      if (e < best) {
        best = e;
        states.clear();
      }
      if (e == best) states.push_back(s);
    }
    std::sort(states.begin(), states.end());
    const auto g = ground_states_exhaustive(m);
    REQUIRE(g.energy == best);
    REQUIRE(g.states == states);
  }
}

TEST_CASE("anneal schedule") {
  AnnealSchedule s;
  CHECK(s.sweeps == 1000);
  CHECK(s.beta_initial == 0.1);
  CHECK(s.beta_final == 10.0);
  CHECK(s.beta_at(0) == doctest::Approx(0.1));
  CHECK(s.beta_at(999) == doctest::Approx(10.0));
  CHECK(s.beta_at(500) > s.beta_at(499));
  // geometric: the midpoint is the geometric mean
  AnnealSchedule three{3, 1.0, 100.0};
  CHECK(three.beta_at(1) == doctest::Approx(10.0));
  three.interpolation = Interpolation::linear;
  CHECK(three.beta_at(1) == doctest::Approx(50.5));

  CHECK_THROWS_AS((AnnealSchedule{0, 0.1, 10.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((AnnealSchedule{10, 0.0, 10.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((AnnealSchedule{10, 5.0, 1.0}.validate()), std::invalid_argument);
}

TEST_CASE("annealer: single spin with a field") {
  IsingModel single(1);
  single.add_field(0, 1.0);
  int up = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) up += sa_sample(single, AnnealSchedule{}, seed)[0] == 1;
  CHECK(up >= 950);
}

TEST_CASE("annealer: deterministic per seed") {
  Rng rng = make_rng(5);
  const auto m = qubo_to_ising(random_qubo(8, rng));
  for (auto order : {ProposalOrder::sequential, ProposalOrder::random}) {
    AnnealSchedule s;
    s.order = order;
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(sa_sample(m, s, seed) == sa_sample(m, s, seed));
  }
}

TEST_CASE("annealer: flat landscape samples uniformly") {
  const IsingModel flat(2);
  AnnealSchedule s;
  s.sweeps = 11;  // odd and even sweep counts both leave the start uniform
  std::map<std::vector<std::int8_t>, std::uint64_t> counts;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) ++counts[sa_sample(flat, s, seed).spins()];
  REQUIRE(counts.size() == 4);
  std::vector<std::uint64_t> c;
  for (const auto& [k, v] : counts) c.push_back(v);
  CHECK(stats::chi_squared_uniform_test(c).p_value > 0.01);
}

TEST_CASE("annealer: most mass on ground states for small models") {
  Rng rng = make_rng(31337);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 3 + uniform_index(rng, 6);
    const auto m = qubo_to_ising(random_qubo(n, rng));
    const auto g = ground_states_exhaustive(m);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto s = sa_sample(m, AnnealSchedule{}, derive_seed(t, 0, seed));
      hits += std::binary_search(g.states.begin(), g.states.end(), s);
    }
    CHECK(hits >= 100);
  }
}

TEST_CASE("anneal sampler reports energies as costs") {
  IsingModel pair(2);
  pair.add_coupling(0, 1, 1.0);
  pair.add_field(0, 0.25);
  AnnealSampler sampler(pair, AnnealSchedule{}, 9);
  for (int i = 0; i < 50; ++i) {
    const auto s = sampler.draw();
    CHECK(s.cost == ising_energy(pair, bits_to_spins(s.key)));
  }
}
