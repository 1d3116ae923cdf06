#pragma once

#include "bhhl/field.hpp"

namespace bhhl {

/// Best constant A_q in the Khinchine inequality for exponent q in [1, 2].
///
/// REAL:    A_q = 2^(1/2 - 1/q)                       for q <= q0,
///          A_q = sqrt(2) * (Gamma((1+q)/2)/sqrt(pi))^(1/q)   for q > q0,
///          where q0 = solve_q0() is the crossover point (the two branches
///          agree there; the closed form is used at exactly q0).
/// COMPLEX: A_q = Gamma((q+2)/2)^(1/q) (Steinhaus variables).
double khinchine_a(double q, ScalarField field);

/// log of khinchine_a.
double log_khinchine_a(double q, ScalarField field);

/// The factor A^{-1}_{(2j-2)/j} appearing in the product bounds, for j >= 2.
///
/// REAL:    2^(1/(2j-2))                                   for j <= 13,
///          2^(-1/2) * (Gamma(3/2 - 1/j)/sqrt(pi))^(j/(2-2j))  for j >= 14
///          (the exponent (2j-2)/j crosses q0 between j = 13 and j = 14).
/// COMPLEX: Gamma(2 - 1/j)^(j/(2-2j)).
double khinchine_a_inv_bh(int j, ScalarField field);

/// log of khinchine_a_inv_bh; the building block of the log-space products.
double log_khinchine_a_inv_bh(int j, ScalarField field);

}  // namespace bhhl
