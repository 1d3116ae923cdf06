#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhhl/exponents.hpp"
#include "bhhl/extended_real.hpp"
#include "bhhl/tensor.hpp"

namespace bhhl {

enum class NormKind { EXACT, LOWER_BOUND, UPPER_BOUND };

std::string to_string(NormKind k);

/// One operator-norm figure with its provenance.
struct NormEstimate {
  double value = 0.0;
  NormKind kind = NormKind::EXACT;
  std::string method;
  std::int64_t iterations = 0;
  std::optional<std::int64_t> seed;
};

/// Certified ratio together with the pieces it was formed from.
struct RatioCertificate {
  double ratio = 0.0;
  double mixed = 0.0;        // numerator
  NormEstimate denominator;  // EXACT or UPPER_BOUND
};

/// Nested mixed norm: innermost index j_m contracted with exponent q_m,
/// outermost j_1 with q_1. Exponents may be any reals >= 1.
double mixed_norm(const CoefficientTensor& t, const std::vector<double>& q);
double mixed_norm(const CoefficientTensor& t, const MultiExponent& q);

inline constexpr int kDefaultEnumerationCap = 24;

/// Exact sup of |T(x_1,...,x_m)| over the unit ball of real l_inf^n in each
/// argument. Enumerates sign vectors for arguments 1..m-1 (first coordinate
/// pinned by sign symmetry) and resolves the last argument as sum of
/// absolute values. Requires field REAL and n(m-1) <= cap.
NormEstimate sup_norm_exact_real_linf(const CoefficientTensor& t,
                                      int cap = kDefaultEnumerationCap);

/// Certified upper bound on the operator norm over l_p^n arguments: the mixed
/// norm of |entries| with all exponents p* = p/(p-1) (p = inf gives p* = 1,
/// i.e. the sum of absolute values). Valid by m applications of Hoelder.
NormEstimate sup_norm_upper_holder(const CoefficientTensor& t, ExtendedReal p);

struct AscentConfig {
  int starts = 32;
  int max_sweeps = 500;
  double rel_tol = 1e-10;
  std::int64_t seed = 0;
  /// When set, the objective after every sweep of every start is appended
  /// (starts are laid out back to back in start order).
  std::vector<double>* trace = nullptr;
};

/// Alternating maximization lower bound for the operator norm over l_p^n:
/// cycling through arguments, each update is the exact dual-norm maximizer of
/// the induced linear functional, so the objective never decreases. Best
/// value over all starts; deterministic per (seed, starts).
NormEstimate sup_norm_ascent(const CoefficientTensor& t, ExtendedReal p,
                             const AscentConfig& cfg = {});

/// mixed_norm(t, q) divided by an exact (REAL, p = inf, within cap) or
/// Hoelder-certified upper denominator; a valid lower bound on the optimal
/// constant for (m, p, q). Throws cap_exceeded_error when the exact REAL
/// p = inf denominator is requested beyond the cap.
RatioCertificate certified_ratio(const CoefficientTensor& t, const MultiExponent& q,
                                 ExtendedReal p, int cap = kDefaultEnumerationCap);

/// The recursive +-1 block construction realizing the 2^(1-1/m) lower bound:
/// base [[1,1],[1,-1]], each step doubles dimension and splits the new last
/// argument across the two halves. Uniform dimension 2^(m-1), zero-padded,
/// 4^(m-1) nonzero entries, exact l_inf norm 2^(m-1). m in [2, 6].
CoefficientTensor hadamard_block_form(int m);

}  // namespace bhhl
