#pragma once

namespace bhhl {

/// Numeric policy shared by the scalar special-function kernel.
struct KernelConfig {
  double gamma_rel_tol = 1e-13;  // target relative accuracy of gamma_fn
  double root_abs_tol = 1e-12;   // bisection stopping width for solve_q0
  int max_root_iters = 200;
};

inline constexpr double kEulerGamma = 0.5772156649015329;

/// Gamma function for real x > 0. Fixed-coefficient Lanczos rational
/// approximation (13 terms, double precision); relative error well under
/// KernelConfig::gamma_rel_tol across the tested range. Throws
/// std::domain_error for x <= 0 or non-finite x.
double gamma_fn(double x);

/// log(gamma_fn(x)) evaluated in log space (no overflow for large x).
double log_gamma(double x);

/// Euler-Mascheroni constant to double precision.
double euler_gamma();

/// Unique root in (1, 2) of Gamma((q+1)/2) = sqrt(pi)/2. The equation also
/// vanishes at q = 2, so the bisection brackets [1, 1.92], strictly inside
/// which the defining function is monotone and crosses zero exactly once.
double solve_q0(const KernelConfig& cfg = {});

}  // namespace bhhl
