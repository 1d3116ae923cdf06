#pragma once

#include <cstdint>
#include <optional>

#include "bhhl/exponents.hpp"
#include "bhhl/norms.hpp"
#include "bhhl/tensor.hpp"

namespace bhhl {

struct SearchResult {
  CoefficientTensor tensor;
  double ratio = 0.0;
  std::int64_t iterations = 0;
  std::int64_t seed = 0;
  /// Applicable proved upper bound for (q, p), when the exponent vector is
  /// admissible; the search never returns ratio > bound + 1e-9.
  std::optional<double> bound;
};

/// Randomized pattern search over REAL tensor entries maximizing
/// certified_ratio(t, q, p): coordinate steps with adaptive halving and
/// random restarts, deterministic per seed. iters counts candidate ratio
/// evaluations. For p = inf the denominators are exact (n(m-1) must fit the
/// cap); for finite p they are the Hoelder upper bounds.
SearchResult search_extremal(int m, int n, ExtendedReal p, const MultiExponent& q,
                             std::int64_t iters, std::int64_t seed,
                             int cap = kDefaultEnumerationCap);

}  // namespace bhhl
