#include "bhhl/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bhhl {
namespace {

double rand_unit(std::uint64_t& state) {
  state ^= state >> 12;
  state ^= state << 25;
  state ^= state >> 27;
  const std::uint64_t z = state * 0x2545F4914F6CDD1DULL;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

std::uint64_t seed_state(std::int64_t seed) {
  std::uint64_t z = static_cast<std::uint64_t>(seed) ^ 0xD1B54A32D192ED03ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z == 0 ? 0x9E3779B97F4A7C15ULL : z;
}

}  // namespace

SearchResult search_extremal(int m, int n, ExtendedReal p, const MultiExponent& q,
                             std::int64_t iters, std::int64_t seed, int cap) {
  if (m < 1 || n < 1) {
    throw std::domain_error("search_extremal: m and n must be >= 1");
  }
  if (q.m() != m) {
    throw std::domain_error("search_extremal: exponent vector length must equal m");
  }
  if (iters < 1) {
    throw std::domain_error("search_extremal: iters must be >= 1");
  }
  if (p.is_infinite() && m >= 2) {
    const long long work = static_cast<long long>(n) * (m - 1);
    if (work > cap) {
      throw cap_exceeded_error("search_extremal: n(m-1) = " + std::to_string(work) +
                               " exceeds the enumeration cap " + std::to_string(cap));
    }
  }

  // Proved ceiling for admissible q; absent otherwise (nothing to compare to).
  std::optional<double> bound;
  try {
    bound = p.is_infinite() ? gen_bh_upper(q, ScalarField::REAL).value
                            : gen_hl_upper(q, p, ScalarField::REAL).value;
  } catch (const admissibility_error&) {
  }

  const std::size_t total = CoefficientTensor::dense_size(m, n);
  std::uint64_t rng = seed_state(seed);
  std::int64_t evals = 0;

  auto ratio_of = [&](const std::vector<double>& e) -> double {
    ++evals;
    bool all_zero = true;
    for (double v : e) {
      if (v != 0.0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      return -1.0;
    }
    const CoefficientTensor t = CoefficientTensor::real_tensor(m, n, e);
    return certified_ratio(t, q, p, cap).ratio;
  };

  std::vector<double> best;
  double best_ratio = -1.0;

  while (evals < iters) {
    // Fresh random start.
    std::vector<double> cur(total);
    for (double& v : cur) {
      v = 2.0 * rand_unit(rng) - 1.0;
    }
    double cur_ratio = ratio_of(cur);
    if (cur_ratio > best_ratio) {
      best_ratio = cur_ratio;
      best = cur;
    }

    // Compass climb: cycle coordinates, halve the step when a full sweep
    // brings no improvement.
    double step = 0.5;
    while (evals < iters && step > 1e-13) {
      bool improved = false;
      for (std::size_t i = 0; i < total && evals < iters; ++i) {
        for (int dir : {+1, -1}) {
          std::vector<double> cand = cur;
          cand[i] += dir * step;
          const double r = ratio_of(cand);
          if (r > cur_ratio) {
            cur = std::move(cand);
            cur_ratio = r;
            improved = true;
            if (r > best_ratio) {
              best_ratio = r;
              best = cur;
            }
            break;
          }
          if (evals >= iters) {
            break;
          }
        }
      }
      if (!improved) {
        step *= 0.5;
      }
    }

    // Sign-snap probe: extremal tensors are sign patterns, so test the
    // nearest one before restarting.
    if (evals < iters) {
      double amax = 0.0;
      for (double v : cur) {
        amax = std::max(amax, std::abs(v));
      }
      if (amax > 0.0) {
        std::vector<double> snap(total, 0.0);
        for (std::size_t i = 0; i < total; ++i) {
          if (std::abs(cur[i]) > 0.5 * amax) {
            snap[i] = cur[i] > 0.0 ? 1.0 : -1.0;
          }
        }
        const double r = ratio_of(snap);
        if (r > best_ratio) {
          best_ratio = r;
          best = std::move(snap);
        }
      }
    }
  }

  if (best.empty() || best_ratio <= 0.0) {
    throw std::runtime_error("search_extremal: no usable candidate found");
  }
  if (bound.has_value() && best_ratio > *bound + 1e-9) {
    throw std::runtime_error(
        "search_extremal: certified ratio exceeds the proved upper bound; "
        "this falsifies the implementation, not the inequality");
  }

  SearchResult res{CoefficientTensor::real_tensor(m, n, best), best_ratio, evals, seed, bound};
  return res;
}

}  // namespace bhhl
