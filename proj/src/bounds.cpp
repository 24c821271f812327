#include "fairenum/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fairenum::bounds {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;

// (1/e + (1/3) ln(1/3)) / (1/e - 1/3)
double beta_ratio() {
  const double third = 1.0 / 3.0;
  return (kInvE + third * std::log(third)) / (kInvE - third);
}

void require_open_interval(double epsilon, double upper, const char* what) {
  if (!(epsilon > 0.0 && epsilon < upper)) {
    throw std::domain_error(std::string(what) + ": epsilon must lie in (0, " +
                            std::to_string(upper) + "), got " +
                            std::to_string(epsilon));
  }
}

// 1 / (1 - e^{-alpha/(e-1)})
double geometric_factor(double alpha) {
  return 1.0 / (-std::expm1(-alpha / (std::numbers::e - 1.0)));
}

}  // namespace

double kappa1_epsilon_limit() { return kInvE; }

double kappa2_epsilon_limit() { return std::exp(-1.5); }

ToleranceParams derive_params(double epsilon) {
  require_open_interval(epsilon, kappa1_epsilon_limit(), "derive_params");
  const double alpha = std::log(1.0 / epsilon) - 1.0;
  return {epsilon, alpha, beta_ratio() * alpha};
}

double kappa1(double epsilon) {
  const auto p = derive_params(epsilon);
  const double first = std::pow(3.0, -2.0 * p.alpha) / (-std::expm1(-p.beta));
  return first + geometric_factor(p.alpha);
}

double kappa2(double epsilon) {
  require_open_interval(epsilon, kappa2_epsilon_limit(), "kappa2");
  const auto p = derive_params(epsilon);
  const double g = geometric_factor(p.alpha);
  // (2 - q) / (1 - q)^2 with q = e^{-alpha/(e-1)} equals g + g^2.
  const double second = g + g * g;
  const double first = std::pow(4.0, p.alpha) / (-std::expm1(-p.beta)) *
                       zeta_tail(2.0 * p.alpha, 6);
  return first + second;
}

KappaValues kappas(double epsilon) { return {kappa1(epsilon), kappa2(epsilon)}; }

double zeta_tail(double s, std::uint64_t k_start) {
  if (!(s > 1.0)) {
    throw std::domain_error("zeta_tail: s must exceed 1, got " + std::to_string(s));
  }
  if (k_start == 0) throw std::domain_error("zeta_tail: k_start must be >= 1");

  // Direct summation up to the cut-off, then an Euler-Maclaurin remainder.
  // At K >= 64 the first omitted correction is below 1e-15 for any s > 1
  // used here, so the result is accurate well past 1e-12.
  constexpr std::uint64_t kCutoff = 64;
  const std::uint64_t last = k_start > kCutoff ? k_start : kCutoff;

  double sum = 0.0;
  for (std::uint64_t k = last; k-- > k_start;) {  // small terms first
    sum += std::pow(static_cast<double>(k), -s);
  }

  const double K = static_cast<double>(last);
  const double fk = std::pow(K, -s);
  double tail = K * fk / (s - 1.0)  // integral from K to infinity
                + 0.5 * fk;
  tail += s * fk / K / 12.0;
  tail -= s * (s + 1.0) * (s + 2.0) * fk / (K * K * K) / 720.0;
  tail += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * fk /
          (K * K * K * K * K) / 30240.0;
  return sum + tail;
}

std::uint64_t guarded_ceil(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("guarded_ceil: argument must be positive and finite");
  }
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-9) return static_cast<std::uint64_t>(nearest) + 1;
  return static_cast<std::uint64_t>(std::ceil(x));
}

std::uint64_t deadline(std::uint64_t m, double kappa, double epsilon) {
  if (m < 2) throw std::domain_error("deadline: m must be >= 2");
  if (!(kappa >= 1.0)) throw std::domain_error("deadline: kappa must be >= 1");
  require_open_interval(epsilon, 1.0, "deadline");
  const double md = static_cast<double>(m);
  return guarded_ceil(md * std::log(md * kappa / epsilon));
}

std::uint64_t sample_budget(std::uint64_t n, double epsilon, double kappa) {
  if (n < 1) throw std::domain_error("sample_budget: n must be >= 1");
  return deadline(n + 1, kappa, epsilon);
}

}  // namespace fairenum::bounds
