#pragma once

// Slow, independent reference computations used as expected values in tests.
// None of these share code with the library.

#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

// sum_{k >= k_start} k^-s by brute force up to `terms` terms in long double,
// plus the midpoint-integral estimate of the remainder.
inline long double zeta_tail_bruteforce(long double s, std::uint64_t k_start,
                                        std::uint64_t terms = 20000000) {
  long double sum = 0.0L;
  const std::uint64_t last = k_start + terms - 1;
  for (std::uint64_t k = last; k >= k_start; --k) {
    sum += std::pow(static_cast<long double>(k), -s);
    if (k == k_start) break;
  }
  // integral from last + 1/2 to infinity of x^-s dx
  sum += std::pow(static_cast<long double>(last) + 0.5L, 1.0L - s) / (s - 1.0L);
  return sum;
}

// P(X <= s), X ~ Binomial(n, p), summing pmf terms built from exact
// multiplicative binomial coefficients in long double.
inline long double binomial_cdf(std::uint64_t s, std::uint64_t n, long double p) {
  long double total = 0.0L;
  for (std::uint64_t k = 0; k <= s; ++k) {
    long double c = 1.0L;
    for (std::uint64_t i = 1; i <= k; ++i) {
      c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    }
    total += c * std::pow(p, static_cast<long double>(k)) *
             std::pow(1.0L - p, static_cast<long double>(n - k));
  }
  return total;
}

// Regularized incomplete beta I_x(a, b) by composite Simpson integration of
// the beta density (a, b >= 1 keeps the integrand bounded).
inline double beta_cdf_quadrature(double x, double a, double b, int panels = 20000) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  auto pdf = [&](double t) {
    if (t <= 0.0) return a == 1.0 ? std::exp(log_norm) : 0.0;
    if (t >= 1.0) return b == 1.0 ? std::exp(log_norm) : 0.0;
    return std::exp(log_norm + (a - 1.0) * std::log(t) + (b - 1.0) * std::log1p(-t));
  };
  const double h = x / panels;
  double acc = pdf(0.0) + pdf(x);
  for (int i = 1; i < panels; ++i) acc += pdf(i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Solves beta_cdf_quadrature(x, a, b) = q by bisection.
inline double beta_quantile_bisection(double q, double a, double b) {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (beta_cdf_quadrature(mid, a, b) < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Upper tail of chi-squared with one degree of freedom: 2 * Phi(-sqrt(x)).
inline double chi2_1_sf(double x) { return std::erfc(std::sqrt(x / 2.0)); }

// All maximum cliques of the graph given by adjacency(u, v), by checking
// every subset of n <= 20 vertices. Returned as bit masks, ascending.
inline std::vector<std::uint32_t> max_cliques_bruteforce(
    unsigned n, const std::function<bool(unsigned, unsigned)>& adjacent) {
  std::vector<std::uint32_t> best;
  int best_size = -1;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (unsigned u = 0; ok && u < n; ++u) {
      if (!(mask >> u & 1U)) continue;
      for (unsigned v = u + 1; ok && v < n; ++v) {
        if ((mask >> v & 1U) && !adjacent(u, v)) ok = false;
      }
    }
    if (!ok) continue;
    const int size = __builtin_popcount(mask);
    if (size > best_size) {
      best_size = size;
      best.clear();
    }
    if (size == best_size) best.push_back(mask);
  }
  return best;
}

}  // namespace oracle
