#include "bhhl/scalar_kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bhhl {
namespace {

// Lanczos rational approximation, N=13, g = 6.024680040776729583740234375.
// Published double-precision coefficient set; the denominator is
// z(z+1)...(z+11) expanded, the numerator absorbs sqrt(2*pi).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};

constexpr double kLanczosDen[13] = {
    0.0,         39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0,  13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,      66.0,       1.0,
};

// num(z)/den(z) with both polynomials evaluated by Horner. For large z the
// ratio is formed from the reversed polynomials in 1/z to avoid overflow.
double lanczos_sum(double z) {
  if (z <= 30.0) {
    double num = 0.0;
    double den = 0.0;
    for (int i = 12; i >= 0; --i) {
      num = num * z + kLanczosNum[i];
      den = den * z + kLanczosDen[i];
    }
    return num / den;
  }
  const double r = 1.0 / z;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < 13; ++i) {
    num = num * r + kLanczosNum[i];
    den = den * r + kLanczosDen[i];
  }
  return num / den;
}

void check_domain(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("gamma: argument must be a finite real > 0, got " +
                            std::to_string(x));
  }
}

}  // namespace

double gamma_fn(double x) {
  check_domain(x);
  if (x < 0.5) {
    // One recurrence step keeps the rational approximation on its fitted range.
    return gamma_fn(x + 1.0) / x;
  }
  const double zg = x + kLanczosG - 0.5;
  if (x > 140.0) {
    // Direct pow would overflow its intermediate; fall back to log space.
    return std::exp(log_gamma(x));
  }
  return lanczos_sum(x) * std::pow(zg, x - 0.5) * std::exp(-zg);
}

double log_gamma(double x) {
  check_domain(x);
  if (x < 0.5) {
    return log_gamma(x + 1.0) - std::log(x);
  }
  const double zg = x + kLanczosG - 0.5;
  return std::log(lanczos_sum(x)) + (x - 0.5) * std::log(zg) - zg;
}

double euler_gamma() { return kEulerGamma; }

double solve_q0(const KernelConfig& cfg) {
  // f(q) = Gamma((q+1)/2) - sqrt(pi)/2, strictly decreasing on [1, 1.92] with
  // exactly one zero there. (q = 2 is a second root of the same equation, so
  // the bracket deliberately stops short of it.)
  const double target = 0.8862269254527580137;  // sqrt(pi)/2
  auto f = [&](double q) { return gamma_fn((q + 1.0) * 0.5) - target; };
  double lo = 1.0;
  double hi = 1.92;
  double flo = f(lo);
  double fhi = f(hi);
  if (!(flo > 0.0 && fhi < 0.0)) {
    throw std::logic_error("solve_q0: bracket [1, 1.92] failed to straddle the root");
  }
  for (int i = 0; i < cfg.max_root_iters && (hi - lo) > cfg.root_abs_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace bhhl
