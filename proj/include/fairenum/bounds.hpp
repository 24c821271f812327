#pragma once

#include <cstdint>

namespace fairenum::bounds {

// Failure tolerance and the two exponents derived from it.
struct ToleranceParams {
  double epsilon;
  double alpha;  // ln(1/epsilon) - 1
  double beta;   // fixed positive multiple of alpha
};

struct KappaValues {
  double kappa1;
  double kappa2;
};

// Largest admissible epsilon (exclusive) for kappa1 / the csp enumerator.
double kappa1_epsilon_limit();
// Largest admissible epsilon (exclusive) for kappa2 / the optimization
// enumerator. The zeta series in kappa2 needs 2*alpha > 1.
double kappa2_epsilon_limit();

// Throws std::domain_error unless 0 < epsilon < 1/e.
ToleranceParams derive_params(double epsilon);

double kappa1(double epsilon);
double kappa2(double epsilon);
KappaValues kappas(double epsilon);

// sum_{k >= k_start} k^-s, absolute accuracy 1e-12. Throws std::domain_error
// for s <= 1 or k_start == 0.
double zeta_tail(double s, std::uint64_t k_start);

// Ceiling of a positive real that never under-shoots: values within 1e-9 of
// an integer k are mapped to k + 1.
std::uint64_t guarded_ceil(double x);

// ceil(m * ln(m * kappa / epsilon)): the accepted-sample count by which m
// distinct solutions must have been collected. Requires m >= 2, kappa >= 1,
// 0 < epsilon < 1.
std::uint64_t deadline(std::uint64_t m, double kappa, double epsilon);

// Accepted samples a successful run needs when there are n desirable
// solutions: deadline(n + 1, kappa, epsilon).
std::uint64_t sample_budget(std::uint64_t n, double epsilon, double kappa);

}  // namespace fairenum::bounds
