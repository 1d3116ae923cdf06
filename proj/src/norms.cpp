#include "bhhl/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace bhhl {
namespace {

// Uniform double in [0, 1) from raw 64-bit state; avoids std distributions so
// results are identical across standard library implementations.
double rand_unit(std::uint64_t& state) {
  // xorshift* step; deterministic and fast, quality is ample for sampling.
  state ^= state >> 12;
  state ^= state << 25;
  state ^= state >> 27;
  const std::uint64_t z = state * 0x2545F4914F6CDD1DULL;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::int64_t seed, std::int64_t salt) {
  std::uint64_t z = static_cast<std::uint64_t>(seed) + 0x9E3779B97F4A7C15ULL *
                                                           (static_cast<std::uint64_t>(salt) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z = z ^ (z >> 31);
  return z == 0 ? 0x1234567887654321ULL : z;
}

void check_exponents(const std::vector<double>& q) {
  for (double v : q) {
    if (!(v >= 1.0) || !std::isfinite(v)) {
      throw std::domain_error("mixed_norm: exponents must be finite reals >= 1");
    }
  }
}

// Contract the innermost axis of a flat row-major array with an l_q norm.
void fold_last_axis(std::vector<double>& buf, std::size_t groups, std::size_t n, double q) {
  if (q == 1.0) {
    for (std::size_t g = 0; g < groups; ++g) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        s += buf[g * n + j];
      }
      buf[g] = s;
    }
    return;
  }
  if (q == 2.0) {
    for (std::size_t g = 0; g < groups; ++g) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double v = buf[g * n + j];
        s += v * v;
      }
      buf[g] = std::sqrt(s);
    }
    return;
  }
  for (std::size_t g = 0; g < groups; ++g) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += std::pow(buf[g * n + j], q);
    }
    buf[g] = std::pow(s, 1.0 / q);
  }
}

}  // namespace

std::string to_string(NormKind k) {
  switch (k) {
    case NormKind::EXACT: return "EXACT";
    case NormKind::LOWER_BOUND: return "LOWER_BOUND";
    case NormKind::UPPER_BOUND: return "UPPER_BOUND";
  }
  return "UNKNOWN";
}

double mixed_norm(const CoefficientTensor& t, const std::vector<double>& q) {
  if (static_cast<int>(q.size()) != t.m()) {
    std::ostringstream os;
    os << "dimension mismatch: tensor has m = " << t.m() << " slots, exponent vector has "
       << q.size();
    throw tensor_format_error(os.str());
  }
  check_exponents(q);
  const std::size_t n = static_cast<std::size_t>(t.n());
  std::vector<double> buf(t.size());
  for (std::size_t i = 0; i < buf.size(); ++i) {
    buf[i] = t.abs_entry(i);
  }
  std::size_t groups = buf.size() / n;
  for (int level = t.m() - 1; level >= 0; --level) {
    fold_last_axis(buf, groups, n, q[level]);
    groups /= n;
  }
  return buf[0];
}

double mixed_norm(const CoefficientTensor& t, const MultiExponent& q) {
  return mixed_norm(t, q.values());
}

NormEstimate sup_norm_exact_real_linf(const CoefficientTensor& t, int cap) {
  if (t.field() != ScalarField::REAL) {
    throw std::domain_error("sup_norm_exact_real_linf: REAL tensors only");
  }
  const int m = t.m();
  const int n = t.n();
  std::vector<double> a = t.real_entries();

  NormEstimate est;
  est.kind = NormKind::EXACT;
  est.method = "sign-enumeration";

  if (m == 1) {
    double s = 0.0;
    for (double v : a) {
      s += std::abs(v);
    }
    est.value = s;
    est.iterations = 1;
    return est;
  }

  const long long work = static_cast<long long>(n) * (m - 1);
  if (work > cap) {
    std::ostringstream os;
    os << "enumeration cap exceeded: n(m-1) = " << work << " > cap " << cap;
    throw cap_exceeded_error(os.str());
  }

  // Levels 1..m-1 hold the running contraction of arguments 1..k against the
  // current sign vectors; the tensor contracted so far at level k has n^(m-k)
  // entries. The first coordinate of every enumerated argument is pinned to
  // +1 (global sign symmetry per argument), and the remaining n-1 signs are
  // walked in Gray-code order with O(n^(m-k)) incremental updates.
  std::vector<std::vector<double>> buf(m - 1);
  std::size_t len = t.size();
  for (int k = 1; k <= m - 1; ++k) {
    len /= static_cast<std::size_t>(n);
    buf[k - 1].assign(len, 0.0);
  }
  std::vector<std::vector<int>> sign(m - 1, std::vector<int>(n, 1));

  double best = 0.0;
  std::int64_t evals = 0;

  auto score_last = [&]() {
    double s = 0.0;
    for (double v : buf[m - 2]) {
      s += std::abs(v);
    }
    if (s > best) {
      best = s;
    }
    ++evals;
  };

  const std::uint64_t flips = (n >= 2) ? ((1ULL << (n - 1)) - 1) : 0;

  auto visit = [&](auto&& self, int k) -> void {
    const std::vector<double>& parent = (k == 1) ? a : buf[k - 2];
    std::vector<double>& cur = buf[k - 1];
    const std::size_t stride = cur.size();
    std::fill(sign[k - 1].begin(), sign[k - 1].end(), 1);
    for (std::size_t idx = 0; idx < stride; ++idx) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        s += parent[static_cast<std::size_t>(j) * stride + idx];
      }
      cur[idx] = s;
    }
    if (k == m - 1) {
      score_last();
    } else {
      self(self, k + 1);
    }
    for (std::uint64_t step = 1; step <= flips; ++step) {
      const int b = std::countr_zero(step) + 1;  // coordinate 0 stays +1
      const double f = -2.0 * sign[k - 1][b];
      sign[k - 1][b] = -sign[k - 1][b];
      const double* src = parent.data() + static_cast<std::size_t>(b) * stride;
      for (std::size_t idx = 0; idx < stride; ++idx) {
        cur[idx] += f * src[idx];
      }
      if (k == m - 1) {
        score_last();
      } else {
        self(self, k + 1);
      }
    }
  };
  visit(visit, 1);

  est.value = best;
  est.iterations = evals;
  return est;
}

NormEstimate sup_norm_upper_holder(const CoefficientTensor& t, ExtendedReal p) {
  if (!p.is_infinite() && p.value() < 2.0) {
    throw std::domain_error("sup_norm_upper_holder: requires p >= 2 or p = inf");
  }
  const double pstar = p.is_infinite() ? 1.0 : p.value() / (p.value() - 1.0);
  const std::vector<double> q(static_cast<std::size_t>(t.m()), pstar);
  NormEstimate est;
  est.value = mixed_norm(t, q);
  est.kind = NormKind::UPPER_BOUND;
  est.method = "holder-mixed-norm(p* = " + std::to_string(pstar) + ")";
  est.iterations = 1;
  return est;
}

namespace {

// One alternating-maximization run from a random start; returns the final
// objective. Template over the scalar type so REAL stays in double arithmetic.
template <typename Scalar>
double ascent_run(const std::vector<Scalar>& a, int m, int n, ExtendedReal p, int max_sweeps,
                  double rel_tol, std::uint64_t rng_state, int* sweeps_out,
                  std::vector<double>* trace) {
  const bool p_inf = p.is_infinite();
  const double pv = p_inf ? 0.0 : p.value();

  auto rand_scalar = [&](std::uint64_t& st) -> Scalar {
    if constexpr (std::is_same_v<Scalar, double>) {
      return 2.0 * rand_unit(st) - 1.0;
    } else {
      return Scalar(2.0 * rand_unit(st) - 1.0, 2.0 * rand_unit(st) - 1.0);
    }
  };

  // Normalize x to unit l_p; returns false when x is (numerically) zero.
  auto normalize = [&](std::vector<Scalar>& x) -> bool {
    double nrm = 0.0;
    if (p_inf) {
      for (const Scalar& v : x) {
        nrm = std::max(nrm, std::abs(v));
      }
    } else if (pv == 1.0) {
      for (const Scalar& v : x) {
        nrm += std::abs(v);
      }
    } else {
      for (const Scalar& v : x) {
        nrm += std::pow(std::abs(v), pv);
      }
      nrm = std::pow(nrm, 1.0 / pv);
    }
    if (!(nrm > 0.0)) {
      return false;
    }
    for (Scalar& v : x) {
      v /= nrm;
    }
    return true;
  };

  std::vector<std::vector<Scalar>> x(m, std::vector<Scalar>(n));
  for (auto& arg : x) {
    do {
      for (Scalar& v : arg) {
        v = rand_scalar(rng_state);
      }
    } while (!normalize(arg));
  }

  std::vector<Scalar> c(n);
  std::vector<int> digits(m);

  // c[j] = sum over entries with index_k = j of a * prod_{l != k} x_l[j_l].
  auto contract = [&](int k) {
    std::fill(c.begin(), c.end(), Scalar(0));
    const std::size_t total = a.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (int l = m - 1; l >= 0; --l) {
        digits[l] = static_cast<int>(rest % n);
        rest /= n;
      }
      Scalar w = a[idx];
      if (w == Scalar(0)) {
        continue;
      }
      for (int l = 0; l < m; ++l) {
        if (l != k) {
          w *= x[l][digits[l]];
        }
      }
      c[digits[k]] += w;
    }
  };

  // Replace x_k by the exact maximizer of |<c, x>| over the unit l_p ball;
  // returns the achieved value, the dual norm ||c||_{p*}.
  auto align = [&](int k) -> double {
    double cnorm = 0.0;
    if (p_inf) {
      for (const Scalar& v : c) {
        cnorm += std::abs(v);
      }
      if (!(cnorm > 0.0)) {
        return -1.0;
      }
      for (int j = 0; j < n; ++j) {
        const double mag = std::abs(c[j]);
        if constexpr (std::is_same_v<Scalar, double>) {
          x[k][j] = (c[j] >= 0.0) ? 1.0 : -1.0;
        } else {
          x[k][j] = (mag > 0.0) ? std::conj(c[j]) / mag : Scalar(1);
        }
      }
      return cnorm;
    }
    if (pv == 1.0) {
      int jbest = 0;
      for (int j = 1; j < n; ++j) {
        if (std::abs(c[j]) > std::abs(c[jbest])) {
          jbest = j;
        }
      }
      const double mag = std::abs(c[jbest]);
      if (!(mag > 0.0)) {
        return -1.0;
      }
      for (int j = 0; j < n; ++j) {
        x[k][j] = Scalar(0);
      }
      if constexpr (std::is_same_v<Scalar, double>) {
        x[k][jbest] = (c[jbest] >= 0.0) ? 1.0 : -1.0;
      } else {
        x[k][jbest] = std::conj(c[jbest]) / mag;
      }
      return mag;
    }
    const double pstar = pv / (pv - 1.0);
    double sum = 0.0;
    for (const Scalar& v : c) {
      sum += std::pow(std::abs(v), pstar);
    }
    if (!(sum > 0.0)) {
      return -1.0;
    }
    const double dual = std::pow(sum, 1.0 / pstar);  // achieved objective
    const double xnorm = std::pow(sum, 1.0 / pv);
    for (int j = 0; j < n; ++j) {
      const double mag = std::abs(c[j]);
      if (mag == 0.0) {
        x[k][j] = Scalar(0);
        continue;
      }
      const double coeff = std::pow(mag, pstar - 1.0) / xnorm;
      if constexpr (std::is_same_v<Scalar, double>) {
        x[k][j] = (c[j] >= 0.0) ? coeff : -coeff;
      } else {
        x[k][j] = std::conj(c[j]) / mag * coeff;
      }
    }
    return dual;
  };

  double objective = 0.0;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double last = objective;
    for (int k = 0; k < m; ++k) {
      contract(k);
      const double val = align(k);
      if (val >= 0.0) {
        objective = val;
      }
    }
    if (trace != nullptr) {
      trace->push_back(objective);
    }
    if (sweep > 0 && objective <= last * (1.0 + rel_tol)) {
      ++sweep;
      break;
    }
  }
  if (sweeps_out != nullptr) {
    *sweeps_out = sweep;
  }
  return objective;
}

template <typename Scalar>
std::vector<Scalar> scalar_entries(const CoefficientTensor& t);

template <>
std::vector<double> scalar_entries<double>(const CoefficientTensor& t) {
  return t.real_entries();
}

template <>
std::vector<std::complex<double>> scalar_entries<std::complex<double>>(
    const CoefficientTensor& t) {
  return t.entries();
}

template <typename Scalar>
NormEstimate ascent_impl(const CoefficientTensor& t, ExtendedReal p, const AscentConfig& cfg) {
  const std::vector<Scalar> a = scalar_entries<Scalar>(t);
  double best = 0.0;
  std::int64_t total_sweeps = 0;
  for (int s = 0; s < cfg.starts; ++s) {
    int sweeps = 0;
    const double val =
        ascent_run<Scalar>(a, t.m(), t.n(), p, cfg.max_sweeps, cfg.rel_tol,
                           mix_seed(cfg.seed, s), &sweeps, cfg.trace);
    total_sweeps += sweeps;
    if (val > best) {
      best = val;
    }
  }
  NormEstimate est;
  est.value = best;
  est.kind = NormKind::LOWER_BOUND;
  est.method = "alternating-ascent(starts = " + std::to_string(cfg.starts) + ")";
  est.iterations = total_sweeps;
  est.seed = cfg.seed;
  return est;
}

}  // namespace

NormEstimate sup_norm_ascent(const CoefficientTensor& t, ExtendedReal p, const AscentConfig& cfg) {
  if (!p.is_infinite() && p.value() < 1.0) {
    throw std::domain_error("sup_norm_ascent: requires p >= 1 or p = inf");
  }
  if (cfg.starts < 1) {
    throw std::domain_error("sup_norm_ascent: starts must be >= 1");
  }
  if (t.field() == ScalarField::REAL) {
    return ascent_impl<double>(t, p, cfg);
  }
  return ascent_impl<std::complex<double>>(t, p, cfg);
}

RatioCertificate certified_ratio(const CoefficientTensor& t, const MultiExponent& q,
                                 ExtendedReal p, int cap) {
  if (t.is_zero()) {
    throw tensor_format_error("tensor is identically zero; the ratio is undefined");
  }
  RatioCertificate cert;
  cert.mixed = mixed_norm(t, q);
  if (t.field() == ScalarField::REAL && p.is_infinite()) {
    cert.denominator = sup_norm_exact_real_linf(t, cap);
  } else {
    cert.denominator = sup_norm_upper_holder(t, p);
  }
  cert.ratio = cert.mixed / cert.denominator.value;
  return cert;
}

CoefficientTensor hadamard_block_form(int m) {
  if (m < 2 || m > 6) {
    throw std::domain_error("hadamard_block_form: m must lie in [2, 6]");
  }
  // Base: coefficient matrix [[1, 1], [1, -1]] on dimensions (2, 2).
  std::vector<double> prev = {1.0, 1.0, 1.0, -1.0};
  int prev_n = 2;
  for (int arity = 3; arity <= m; ++arity) {
    const int n = 1 << (arity - 1);
    const int half = prev_n;  // first/second half offset in each slot
    const std::size_t out_size = CoefficientTensor::dense_size(arity, n);
    std::vector<double> out(out_size, 0.0);
    const std::size_t prev_size = prev.size();
    std::vector<int> digits(arity - 1);
    for (std::size_t idx = 0; idx < prev_size; ++idx) {
      const double v = prev[idx];
      if (v == 0.0) {
        continue;
      }
      std::size_t rest = idx;
      for (int l = arity - 2; l >= 0; --l) {
        digits[l] = static_cast<int>(rest % prev_n);
        rest /= prev_n;
      }
      std::size_t base_first = 0;
      std::size_t base_second = 0;
      for (int l = 0; l < arity - 1; ++l) {
        base_first = base_first * n + static_cast<std::size_t>(digits[l]);
        base_second = base_second * n + static_cast<std::size_t>(digits[l] + half);
      }
      // New last argument: coordinates 0 and 1 carry (x+y) and (x-y).
      out[base_first * n + 0] = v;
      out[base_first * n + 1] = v;
      out[base_second * n + 0] = v;
      out[base_second * n + 1] = -v;
    }
    prev = std::move(out);
    prev_n = n;
  }
  return CoefficientTensor::real_tensor(m, prev_n, std::move(prev));
}

}  // namespace bhhl
