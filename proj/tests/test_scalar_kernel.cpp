#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "bhhl/scalar_kernel.hpp"
#include "doctest.h"

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma_fn matches the C library gamma across scales") {
  // std::tgamma is an independent implementation (glibc), good to ~1 ulp.
  const double xs[] = {0.5,  1.0,  1.5, 2.0, 2.5, 3.0, 4.2, 7.9,
                       10.0, 13.7, 0.1, 0.9, 1.1, 1.9, 20.0};
  for (double x : xs) {
    CAPTURE(x);
    CHECK(bhhl::gamma_fn(x) ==
          doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  }
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.05, 30.0);
  for (int i = 0; i < 500; ++i) {
    const double x = dist(rng);
    CAPTURE(x);
    CHECK(bhhl::gamma_fn(x) ==
          doctest::Approx(std::tgamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("gamma_fn hits the classical exact points") {
  CHECK(bhhl::gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bhhl::gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bhhl::gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(bhhl::gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(bhhl::gamma_fn(1.5) ==
        doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-14));
}

TEST_CASE("gamma_fn rejects the closed half-line and non-finite input") {
  CHECK_THROWS_AS(bhhl::gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(bhhl::gamma_fn(-1.5), std::domain_error);
  CHECK_THROWS_AS(bhhl::gamma_fn(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
  CHECK_THROWS_AS(bhhl::gamma_fn(std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("log_gamma agrees with lgamma and survives large arguments") {
  const double xs[] = {0.5, 1.0, 2.5, 10.0, 50.0, 171.0, 500.0, 1e4};
  for (double x : xs) {
    CAPTURE(x);
    CHECK(bhhl::log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
  }
  // x where tgamma overflows but the log stays representable.
  CHECK(std::isfinite(bhhl::log_gamma(1e6)));
  CHECK(bhhl::log_gamma(1e6) == doctest::Approx(std::lgamma(1e6)).epsilon(1e-12));
}

TEST_CASE("log_gamma is consistent with gamma_fn where both are finite") {
  for (double x : {0.3, 1.0, 2.7, 9.5, 40.0}) {
    CAPTURE(x);
    CHECK(bhhl::log_gamma(x) ==
          doctest::Approx(std::log(bhhl::gamma_fn(x))).epsilon(1e-12));
  }
}

TEST_CASE("euler_gamma returns the Euler-Mascheroni constant") {
  CHECK(bhhl::euler_gamma() == 0.5772156649015329);
  CHECK(bhhl::kEulerGamma == 0.5772156649015329);
}

TEST_CASE("solve_q0 finds the crossover root in (1, 1.92)") {
  const double q0 = bhhl::solve_q0();
  // Frozen reference computed with an independent bisection on
  // std::tgamma((q+1)/2) - sqrt(pi)/2 over [1, 1.92].
  CHECK(q0 == doctest::Approx(1.8474163360763476).epsilon(1e-10));
  CHECK(q0 > 1.0);
  CHECK(q0 < 1.92);
  // The defining equation holds at the root.
  const double residual = std::tgamma((q0 + 1.0) / 2.0) - std::sqrt(kPi) / 2.0;
  CHECK(std::abs(residual) < 1e-11);
  // The bracket endpoints straddle the root.
  CHECK(std::tgamma((1.0 + 1.0) / 2.0) - std::sqrt(kPi) / 2.0 > 0.0);
  CHECK(std::tgamma((1.92 + 1.0) / 2.0) - std::sqrt(kPi) / 2.0 < 0.0);
}

TEST_CASE("solve_q0 honors a tighter tolerance request") {
  bhhl::KernelConfig cfg;
  cfg.root_abs_tol = 1e-14;
  const double tight = bhhl::solve_q0(cfg);
  CHECK(std::abs(tight - bhhl::solve_q0()) < 1e-11);
}
