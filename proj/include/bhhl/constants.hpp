#pragma once

#include <cstdint>
#include <string>

#include "bhhl/extended_real.hpp"
#include "bhhl/field.hpp"

namespace bhhl {

enum class FormulaId {
  BH_PRODUCT,
  BH_ENVELOPE,
  HL_LEGACY_SQRT2,
  HL_P_DEPENDENT,
  HL_P_FREE,
  HL_BEST,
  HL_LOWER,
  BH_LOWER,
  GEN_MAXQ_INTERPOLATION,
  GEN_PRIOR,
};

std::string to_string(FormulaId id);

/// One evaluated constant bound together with where it came from and whether
/// the parameters sit inside the formula's proved domain.
struct BoundReport {
  double value = 0.0;
  FormulaId formula_id = FormulaId::BH_PRODUCT;
  ScalarField field = ScalarField::REAL;
  int m = 0;
  ExtendedReal p = ExtendedReal::infinity();
  bool valid = true;
  std::string note;     // validity / branch information
  std::string formula;  // self-describing rendering of the formula used
};

/// Best known upper bound for the m-linear Bohnenblust-Hille constant.
///   COMPLEX:          prod_{j=2..m} Gamma(2-1/j)^(j/(2-2j))
///   REAL, m <= 13:    prod_{j=2..m} 2^(1/(2j-2))
///   REAL, m >= 14:    2^(446381/55440 - m/2) * prod_{j=14..m} (Gamma(3/2-1/j)/sqrt(pi))^(j/(2-2j))
/// Evaluated in log space with cached cumulative sums (cheap for m up to 10^4).
BoundReport bh_upper(int m, ScalarField field);

/// log of bh_upper's value (exposed for downstream log-space formulas).
double log_bh_upper(int m, ScalarField field);

/// Sublinear growth envelope dominating bh_upper:
///   COMPLEX: m^((1-gamma)/2);  REAL: 1.3 * m^((2-log2-gamma)/2).
BoundReport bh_envelope(int m, ScalarField field);

/// Classical (sqrt(2))^(m-1) Hardy-Littlewood bound; field-independent.
BoundReport hl_upper_sqrt2(int m);

/// p-dependent bound K^(2m(m-1)/p) * bh_upper^((p-2m)/p) with K = sqrt(2)
/// (REAL) or 2/sqrt(pi) (COMPLEX); p >= 2m, p = inf collapses to bh_upper.
BoundReport hl_upper_p_dependent(int m, ExtendedReal p, ScalarField field);

/// 2m^3 - 4m^2 + 2m, the p beyond which the p-free bound is proved.
std::int64_t hl_threshold(int m);

/// The p-free bound (numerically equal to bh_upper); valid only for
/// p > hl_threshold(m), reported with valid=false otherwise. Requires p > 2m.
BoundReport hl_upper_p_free(int m, ExtendedReal p, ScalarField field);

/// Pointwise minimum of every upper bound whose proved domain contains (m, p);
/// the note names the winning formula.
BoundReport hl_upper_best(int m, ExtendedReal p, ScalarField field);

/// Lower bound 2^((mp + (6-4*log2(1.74))m - 2m^2 - p)/(mp)) for the REAL
/// Hardy-Littlewood constant; finite p >= 2m only.
BoundReport hl_lower_real(int m, ExtendedReal p);

/// Lower bound 2^(1-1/m) for the REAL Bohnenblust-Hille constant.
BoundReport bh_lower_real(int m);

}  // namespace bhhl
