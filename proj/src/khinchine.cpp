#include "bhhl/khinchine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bhhl/scalar_kernel.hpp"

namespace bhhl {
namespace {

constexpr double kLogSqrtPi = 0.57236494292470008707;  // log(sqrt(pi))
constexpr double kLog2 = 0.69314718055994530942;

double q0_cached() {
  static const double q0 = solve_q0();
  return q0;
}

void check_q(double q) {
  if (!(q >= 1.0 && q <= 2.0)) {
    throw std::domain_error("khinchine_a: q must lie in [1, 2], got " + std::to_string(q));
  }
}

}  // namespace

std::string to_string(ScalarField f) { return f == ScalarField::REAL ? "real" : "complex"; }

ScalarField parse_field(std::string_view token) {
  if (token == "real" || token == "REAL" || token == "Real") return ScalarField::REAL;
  if (token == "complex" || token == "COMPLEX" || token == "Complex") return ScalarField::COMPLEX;
  throw std::domain_error("field must be 'real' or 'complex', got '" + std::string(token) + "'");
}

double log_khinchine_a(double q, ScalarField field) {
  check_q(q);
  if (field == ScalarField::COMPLEX) {
    return log_gamma((q + 2.0) * 0.5) / q;
  }
  if (q <= q0_cached()) {
    return (0.5 - 1.0 / q) * kLog2;
  }
  return 0.5 * kLog2 + (log_gamma((1.0 + q) * 0.5) - kLogSqrtPi) / q;
}

double khinchine_a(double q, ScalarField field) { return std::exp(log_khinchine_a(q, field)); }

double log_khinchine_a_inv_bh(int j, ScalarField field) {
  if (j < 2) {
    throw std::domain_error("khinchine_a_inv_bh: j must be >= 2, got " + std::to_string(j));
  }
  const double jd = static_cast<double>(j);
  if (field == ScalarField::COMPLEX) {
    return jd / (2.0 - 2.0 * jd) * log_gamma(2.0 - 1.0 / jd);
  }
  if (j <= 13) {
    return kLog2 / (2.0 * jd - 2.0);
  }
  return -0.5 * kLog2 + jd / (2.0 - 2.0 * jd) * (log_gamma(1.5 - 1.0 / jd) - kLogSqrtPi);
}

double khinchine_a_inv_bh(int j, ScalarField field) {
  return std::exp(log_khinchine_a_inv_bh(j, field));
}

}  // namespace bhhl
