#include "bhhl/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bhhl/khinchine.hpp"
#include "bhhl/scalar_kernel.hpp"

namespace bhhl {
namespace {

constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLogSqrtPi = 0.57236494292470008707;

void check_m(int m, const char* who) {
  if (m < 2) {
    throw std::domain_error(std::string(who) + ": m must be >= 2, got " + std::to_string(m));
  }
}

double log_k_constant(ScalarField field) {
  return field == ScalarField::REAL ? 0.5 * kLog2 : kLog2 - kLogSqrtPi;
}

// Sum target (mp+p-2m)/(2p), with the p = inf limit (m+1)/2.
double sum_rhs(int m, ExtendedReal p) {
  if (p.is_infinite()) {
    return 0.5 * (m + 1);
  }
  const double pv = p.value();
  return (m * pv + pv - 2.0 * m) / (2.0 * pv);
}

double range_lo(int m, ExtendedReal p) {
  if (p.is_infinite()) {
    return 1.0;
  }
  return p.value() / (p.value() - m);
}

enum class AdmissibleStatus { OK, SUM_MISMATCH, RANGE_VIOLATION };

AdmissibleStatus classify_hl(const MultiExponent& q, ExtendedReal p, double tol, SumMode mode,
                             std::string* detail) {
  const int m = q.m();
  const double rhs = sum_rhs(m, p);
  const double sum = q.reciprocal_sum();
  const bool sum_ok = mode == SumMode::EQUALITY ? std::abs(sum - rhs) <= tol
                                                : sum <= rhs + tol;
  if (!sum_ok) {
    if (detail != nullptr) {
      std::ostringstream os;
      os << "exponent sum mismatch: sum 1/q_i = " << sum << ", required "
         << (mode == SumMode::EQUALITY ? "= " : "<= ") << rhs;
      *detail = os.str();
    }
    return AdmissibleStatus::SUM_MISMATCH;
  }
  const double lo = range_lo(m, p);
  for (int i = 0; i < m; ++i) {
    if (q[i] < lo || q[i] > 2.0) {
      if (detail != nullptr) {
        std::ostringstream os;
        os << "range violation: q[" << i << "] = " << q[i] << " outside [" << lo << ", 2]";
        *detail = os.str();
      }
      return AdmissibleStatus::RANGE_VIOLATION;
    }
  }
  return AdmissibleStatus::OK;
}

void check_equality_mode_p(int m, ExtendedReal p) {
  if (!p.is_infinite() && p.value() <= 2.0 * m) {
    throw admissibility_error("p must exceed 2m (p = " + p.str() + ", m = " +
                              std::to_string(m) + "); p = 2m is not covered");
  }
}

}  // namespace

MultiExponent::MultiExponent(std::vector<double> q) : q_(std::move(q)) {
  if (q_.empty()) {
    throw admissibility_error("exponent vector must not be empty");
  }
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (!(q_[i] >= 1.0 && q_[i] <= 2.0)) {
      std::ostringstream os;
      os << "range violation: q[" << i << "] = " << q_[i] << " outside [1, 2]";
      throw admissibility_error(os.str());
    }
  }
}

double MultiExponent::max_q() const { return *std::max_element(q_.begin(), q_.end()); }

double MultiExponent::reciprocal_sum() const {
  double s = 0.0;
  for (double v : q_) {
    s += 1.0 / v;
  }
  return s;
}

double hl_critical_exponent(int m, ExtendedReal p) {
  check_m(m, "hl_critical_exponent");
  if (!p.ge(2.0 * m)) {
    throw std::domain_error("hl_critical_exponent: requires p >= 2m");
  }
  if (p.is_infinite()) {
    return 2.0 * m / (m + 1.0);
  }
  const double pv = p.value();
  return 2.0 * m * pv / (m * pv + pv - 2.0 * m);
}

bool bh_admissible(const MultiExponent& q, double tol) {
  check_m(q.m(), "bh_admissible");
  return std::abs(q.reciprocal_sum() - 0.5 * (q.m() + 1)) <= tol;
}

bool hl_admissible(const MultiExponent& q, ExtendedReal p, double tol, SumMode mode) {
  check_m(q.m(), "hl_admissible");
  if (mode == SumMode::EQUALITY) {
    check_equality_mode_p(q.m(), p);
  } else if (!p.ge(2.0 * q.m())) {
    throw admissibility_error("p must be at least 2m in inequality mode");
  }
  return classify_hl(q, p, tol, mode, nullptr) == AdmissibleStatus::OK;
}

void require_bh_admissible(const MultiExponent& q, double tol) {
  check_m(q.m(), "require_bh_admissible");
  const double sum = q.reciprocal_sum();
  const double rhs = 0.5 * (q.m() + 1);
  if (std::abs(sum - rhs) > tol) {
    std::ostringstream os;
    os << "exponent sum mismatch: sum 1/q_i = " << sum << ", required = " << rhs;
    throw admissibility_error(os.str());
  }
}

void require_hl_admissible(const MultiExponent& q, ExtendedReal p, double tol) {
  check_m(q.m(), "require_hl_admissible");
  check_equality_mode_p(q.m(), p);
  std::string detail;
  if (classify_hl(q, p, tol, SumMode::EQUALITY, &detail) != AdmissibleStatus::OK) {
    throw admissibility_error(detail);
  }
}

double lambda_0(int m, double s) {
  check_m(m, "lambda_0");
  const double lo = (2.0 * m - 2.0) / m;
  if (!(s >= lo && s <= 2.0)) {
    throw std::domain_error("lambda_0: s must lie in [(2m-2)/m, 2]");
  }
  return 2.0 * s / (m * s + s + 2.0 - 2.0 * m);
}

double lambda_m(int m, ExtendedReal p, double s) {
  check_m(m, "lambda_m");
  if (p.is_infinite()) {
    return lambda_0(m, s);
  }
  const double pv = p.value();
  if (pv <= 2.0 * m) {
    throw std::domain_error("lambda_m: requires p > 2m");
  }
  const double lo = (2.0 * m * pv - 2.0 * pv) / (m * pv - 2.0 * m);
  if (!(s >= lo && s <= 2.0)) {
    throw std::domain_error("lambda_m: s must lie in [(2mp-2p)/(mp-2m), 2]");
  }
  return 2.0 * pv * s / (m * pv * s + pv * s + 2.0 * pv - 2.0 * m * pv - 2.0 * m * s);
}

std::vector<double> lambda_ladder(int m, ExtendedReal p, double s) {
  check_m(m, "lambda_ladder");
  if (p.is_infinite()) {
    throw std::domain_error("lambda_ladder: p must be finite");
  }
  const double pv = p.value();
  if (pv <= 2.0 * m) {
    throw std::domain_error("lambda_ladder: requires p > 2m");
  }
  const double l0 = lambda_0(m, s);
  std::vector<double> ladder(m + 1);
  for (int j = 0; j <= m; ++j) {
    const double denom = pv - l0 * j;
    if (denom <= 0.0) {
      throw std::domain_error("lambda_ladder: p - lambda_0 * j must stay positive");
    }
    ladder[j] = l0 * pv / denom;
  }
  return ladder;
}

double max_q_threshold(int m) {
  check_m(m, "max_q_threshold");
  const double md = m;
  return (2.0 * md * md - 4.0 * md + 2.0) / (md * md - md - 1.0);
}

InterpolationDecomposition interpolation_weights(const MultiExponent& q, ExtendedReal p,
                                                 std::optional<double> s_opt, double tol) {
  require_hl_admissible(q, p, tol);
  const int m = q.m();
  const double maxq = q.max_q();
  const double s = s_opt.value_or(0.5 * (maxq + 2.0));
  if (s <= maxq) {
    throw admissibility_error("s must exceed max q_i (s = " + std::to_string(s) +
                              ", max q_i = " + std::to_string(maxq) + ")");
  }
  if (s > 2.0) {
    throw admissibility_error("s must be at most 2 (s = " + std::to_string(s) + ")");
  }
  const double lambda = p.is_infinite() ? lambda_0(m, s) : lambda_m(m, p, s);

  InterpolationDecomposition d;
  d.s = s;
  d.lambda = lambda;
  d.p = p;
  d.thetas.resize(m);
  d.vertices.assign(m, std::vector<double>(m, s));
  for (int j = 0; j < m; ++j) {
    d.thetas[j] = lambda * (s - q[j]) / (q[j] * (s - lambda));
    d.vertices[j][j] = lambda;
  }
  return d;
}

namespace {

// Case split shared by gen_bh_upper and gen_hl_upper; the displayed bound for
// max q_i >= threshold carries no p.
BoundReport gen_upper_common(const MultiExponent& q, ScalarField field, ExtendedReal p) {
  const int m = q.m();
  const double maxq = q.max_q();
  const double threshold = max_q_threshold(m);
  if (maxq < threshold) {
    BoundReport r = bh_upper(m, field);
    r.p = p;
    r.note = "case (i): max q_i < threshold; uniform product bound applies";
    return r;
  }
  const double e_pref = 2.0 * (m - 1.0) * (0.5 * (m + 1.0) - m / maxq);
  const double e_tail = m * (2.0 / maxq - 1.0);
  BoundReport r;
  r.value = std::exp(e_pref * log_k_constant(field) + e_tail * log_bh_upper(m, field));
  r.formula_id = FormulaId::GEN_MAXQ_INTERPOLATION;
  r.field = field;
  r.m = m;
  r.p = p;
  r.valid = true;
  r.note = "case (ii): max q_i >= threshold";
  r.formula = field == ScalarField::REAL
                  ? "sqrt(2)^(2(m-1)((m+1)/2 - m/maxq)) * bh_upper^(m(2/maxq - 1))"
                  : "(2/sqrt(pi))^(2(m-1)((m+1)/2 - m/maxq)) * bh_upper^(m(2/maxq - 1))";
  return r;
}

}  // namespace

BoundReport gen_bh_upper(const MultiExponent& q, ScalarField field, double tol) {
  require_bh_admissible(q, tol);
  return gen_upper_common(q, field, ExtendedReal::infinity());
}

BoundReport gen_bh_upper_prior(const MultiExponent& q, double tol) {
  check_m(q.m(), "gen_bh_upper_prior");
  const auto& v = q.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) {
      throw admissibility_error("gen_bh_upper_prior: q must be sorted ascending");
    }
  }
  require_bh_admissible(q, tol);
  const int m = q.m();

  // P(k) = log of prod_{j=2..k} Gamma(2-1/j)^(j/(2-2j)); the j = 1 factor is 1.
  auto partial = [](int k) { return k >= 2 ? log_bh_upper(k, ScalarField::COMPLEX) : 0.0; };

  double log_val = 2.0 * m * (1.0 / v[m - 1] - 0.5) * partial(m);
  for (int k = 1; k <= m - 1; ++k) {
    const double gap = 1.0 / v[k - 1] - 1.0 / v[k];
    const double mid =
        (-(k + 1.0) / (2.0 * k)) * (m - k) * log_gamma((3.0 * k + 1.0) / (2.0 * k + 2.0));
    log_val += 2.0 * k * gap * (mid + partial(k));
  }

  BoundReport r;
  r.value = std::exp(log_val);
  r.formula_id = FormulaId::GEN_PRIOR;
  r.field = ScalarField::COMPLEX;
  r.m = m;
  r.p = ExtendedReal::infinity();
  r.valid = true;
  r.note = "sorted-exponent product bound (complex scalars only)";
  r.formula =
      "(prod_{j<=m} Gamma(2-1/j)^(j/(2-2j)))^(2m(1/q_m - 1/2)) * prod_{k<m} "
      "(Gamma((3k+1)/(2k+2))^((-k-1)/(2k)*(m-k)) * prod_{j<=k} ...)^(2k(1/q_k - 1/q_{k+1}))";
  return r;
}

BoundReport gen_hl_upper(const MultiExponent& q, ExtendedReal p, ScalarField field, double tol) {
  require_hl_admissible(q, p, tol);
  return gen_upper_common(q, field, p);
}

}  // namespace bhhl
