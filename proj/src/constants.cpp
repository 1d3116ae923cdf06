#include "bhhl/constants.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhhl/khinchine.hpp"
#include "bhhl/scalar_kernel.hpp"

namespace bhhl {
namespace {

constexpr double kLog2 = 0.69314718055994530942;

// Exact rational prefactor of the REAL m >= 14 branch, converted once.
constexpr double kRealSeamExponent = 446381.0 / 55440.0;

void check_m(int m, const char* who) {
  if (m < 2) {
    throw std::domain_error(std::string(who) + ": m must be >= 2, got " + std::to_string(m));
  }
}

// Cumulative log sums S[m] = sum_{j=2..m} of the per-factor logs, grown on
// demand under a lock so concurrent callers are safe.
class CumulativeLog {
 public:
  explicit CumulativeLog(ScalarField field) : field_(field) {}

  double upto(int m) {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(sums_.size()) < m + 1) {
      if (sums_.empty()) {
        sums_.assign(2, 0.0);  // S[0], S[1] unused; S[1] = empty product
      }
      for (int j = static_cast<int>(sums_.size()); j <= m; ++j) {
        sums_.push_back(sums_.back() + log_khinchine_a_inv_bh(j, field_));
      }
    }
    return sums_[m];
  }

 private:
  ScalarField field_;
  std::mutex mu_;
  std::vector<double> sums_;
};

double log_k_constant(ScalarField field) {
  // sqrt(2) for REAL, 2/sqrt(pi) for COMPLEX.
  return field == ScalarField::REAL ? 0.5 * kLog2
                                    : kLog2 - 0.57236494292470008707;
}

std::string bh_formula_string(int m, ScalarField field) {
  if (field == ScalarField::COMPLEX) {
    return "prod_{j=2..m} Gamma(2-1/j)^(j/(2-2j))";
  }
  if (m <= 13) {
    return "prod_{j=2..m} 2^(1/(2j-2))";
  }
  return "2^(446381/55440 - m/2) * prod_{j=14..m} (Gamma(3/2-1/j)/sqrt(pi))^(j/(2-2j))";
}

}  // namespace

std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::BH_PRODUCT: return "BH_PRODUCT";
    case FormulaId::BH_ENVELOPE: return "BH_ENVELOPE";
    case FormulaId::HL_LEGACY_SQRT2: return "HL_LEGACY_SQRT2";
    case FormulaId::HL_P_DEPENDENT: return "HL_P_DEPENDENT";
    case FormulaId::HL_P_FREE: return "HL_P_FREE";
    case FormulaId::HL_BEST: return "HL_BEST";
    case FormulaId::HL_LOWER: return "HL_LOWER";
    case FormulaId::BH_LOWER: return "BH_LOWER";
    case FormulaId::GEN_MAXQ_INTERPOLATION: return "GEN_MAXQ_INTERPOLATION";
    case FormulaId::GEN_PRIOR: return "GEN_PRIOR";
  }
  return "UNKNOWN";
}

double log_bh_upper(int m, ScalarField field) {
  check_m(m, "bh_upper");
  static CumulativeLog complex_sums(ScalarField::COMPLEX);
  static CumulativeLog real_sums(ScalarField::REAL);
  if (field == ScalarField::COMPLEX) {
    return complex_sums.upto(m);
  }
  if (m <= 13) {
    return real_sums.upto(m);
  }
  // Displayed form: 2^(446381/55440 - m/2) times the j = 14..m tail product.
  // Each cached factor for j >= 14 is 2^(-1/2) * (Gamma(3/2-1/j)/sqrt(pi))^(j/(2-2j)),
  // so the bare tail is recovered by adding (m-13)/2 * log 2 back.
  const double tail =
      real_sums.upto(m) - real_sums.upto(13) + 0.5 * (m - 13) * kLog2;
  return (kRealSeamExponent - 0.5 * m) * kLog2 + tail;
}

BoundReport bh_upper(int m, ScalarField field) {
  BoundReport r;
  r.value = std::exp(log_bh_upper(m, field));
  r.formula_id = FormulaId::BH_PRODUCT;
  r.field = field;
  r.m = m;
  r.p = ExtendedReal::infinity();
  r.valid = true;
  r.note = field == ScalarField::REAL && m >= 14 ? "m >= 14 branch" : "";
  r.formula = bh_formula_string(m, field);
  return r;
}

BoundReport bh_envelope(int m, ScalarField field) {
  check_m(m, "bh_envelope");
  BoundReport r;
  const double g = euler_gamma();
  if (field == ScalarField::COMPLEX) {
    r.value = std::pow(static_cast<double>(m), 0.5 * (1.0 - g));
    r.formula = "m^((1-gamma)/2)";
  } else {
    r.value = 1.3 * std::pow(static_cast<double>(m), 0.5 * (2.0 - kLog2 - g));
    r.formula = "1.3 * m^((2-log2-gamma)/2)";
  }
  r.formula_id = FormulaId::BH_ENVELOPE;
  r.field = field;
  r.m = m;
  r.p = ExtendedReal::infinity();
  r.valid = true;
  return r;
}

BoundReport hl_upper_sqrt2(int m) {
  check_m(m, "hl_upper_sqrt2");
  BoundReport r;
  r.value = std::exp(0.5 * kLog2 * (m - 1));
  r.formula_id = FormulaId::HL_LEGACY_SQRT2;
  r.field = ScalarField::REAL;
  r.m = m;
  r.p = ExtendedReal::infinity();
  r.valid = true;
  r.note = "field-independent";
  r.formula = "sqrt(2)^(m-1)";
  return r;
}

BoundReport hl_upper_p_dependent(int m, ExtendedReal p, ScalarField field) {
  check_m(m, "hl_upper_p_dependent");
  if (!p.ge(2.0 * m)) {
    throw std::domain_error("hl_upper_p_dependent: requires p >= 2m");
  }
  BoundReport r;
  if (p.is_infinite()) {
    r.value = std::exp(log_bh_upper(m, field));
    r.note = "p = inf limit: equals the product bound";
  } else {
    const double pv = p.value();
    const double pre = 2.0 * m * (m - 1.0) / pv;
    const double tail = (pv - 2.0 * m) / pv;
    r.value = std::exp(pre * log_k_constant(field) + tail * log_bh_upper(m, field));
  }
  r.formula_id = FormulaId::HL_P_DEPENDENT;
  r.field = field;
  r.m = m;
  r.p = p;
  r.valid = true;
  r.formula = field == ScalarField::REAL
                  ? "sqrt(2)^(2m(m-1)/p) * bh_upper^((p-2m)/p)"
                  : "(2/sqrt(pi))^(2m(m-1)/p) * bh_upper^((p-2m)/p)";
  return r;
}

std::int64_t hl_threshold(int m) {
  check_m(m, "hl_threshold");
  const std::int64_t mm = m;
  return 2 * mm * mm * mm - 4 * mm * mm + 2 * mm;
}

BoundReport hl_upper_p_free(int m, ExtendedReal p, ScalarField field) {
  check_m(m, "hl_upper_p_free");
  if (!p.gt(2.0 * m)) {
    throw std::domain_error("hl_upper_p_free: requires p > 2m");
  }
  BoundReport r;
  r.value = std::exp(log_bh_upper(m, field));
  r.formula_id = FormulaId::HL_P_FREE;
  r.field = field;
  r.m = m;
  r.p = p;
  r.valid = p.gt(static_cast<double>(hl_threshold(m)));
  r.note = r.valid ? "p exceeds the threshold 2m^3-4m^2+2m"
                   : "p does not exceed the threshold 2m^3-4m^2+2m; value not proved there";
  r.formula = "bh_upper(m, field), independent of p";
  return r;
}

BoundReport hl_upper_best(int m, ExtendedReal p, ScalarField field) {
  check_m(m, "hl_upper_best");
  if (!p.ge(2.0 * m)) {
    throw std::domain_error("hl_upper_best: requires p >= 2m");
  }
  BoundReport best = hl_upper_sqrt2(m);
  std::string winner = "sqrt2_legacy";

  const BoundReport dep = hl_upper_p_dependent(m, p, field);
  if (dep.value < best.value) {
    best = dep;
    winner = "p_dependent";
  }
  if (p.gt(2.0 * m)) {
    const BoundReport pfree = hl_upper_p_free(m, p, field);
    if (pfree.valid && pfree.value < best.value) {
      best = pfree;
      winner = "p_free";
    }
  }
  BoundReport r = best;
  r.formula_id = FormulaId::HL_BEST;
  r.field = field;
  r.m = m;
  r.p = p;
  r.valid = true;
  r.note = "winner: " + winner;
  return r;
}

BoundReport hl_lower_real(int m, ExtendedReal p) {
  check_m(m, "hl_lower_real");
  if (p.is_infinite()) {
    throw std::domain_error("hl_lower_real: p must be finite (formula divides by p)");
  }
  if (p.value() < 2.0 * m) {
    throw std::domain_error("hl_lower_real: requires p >= 2m");
  }
  const double pv = p.value();
  const double log2_174 = std::log2(1.74);
  const double expo = (m * pv + (6.0 - 4.0 * log2_174) * m - 2.0 * m * m - pv) / (m * pv);
  BoundReport r;
  r.value = std::exp2(expo);
  r.formula_id = FormulaId::HL_LOWER;
  r.field = ScalarField::REAL;
  r.m = m;
  r.p = p;
  r.valid = true;
  r.formula = "2^((mp + (6-4*log2(1.74))m - 2m^2 - p)/(mp))";
  return r;
}

BoundReport bh_lower_real(int m) {
  check_m(m, "bh_lower_real");
  BoundReport r;
  r.value = std::exp2(1.0 - 1.0 / m);
  r.formula_id = FormulaId::BH_LOWER;
  r.field = ScalarField::REAL;
  r.m = m;
  r.p = ExtendedReal::infinity();
  r.valid = true;
  r.formula = "2^(1-1/m)";
  return r;
}

}  // namespace bhhl
