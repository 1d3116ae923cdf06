#pragma once

#include <optional>
#include <vector>

#include "bhhl/constants.hpp"
#include "bhhl/errors.hpp"
#include "bhhl/extended_real.hpp"
#include "bhhl/field.hpp"

namespace bhhl {

/// An exponent vector (q_1, ..., q_m) with every q_i in [1, 2]. Length 1 is
/// representable (plain mixed norms use it); the inequality algebra below
/// requires m >= 2 and checks it per operation.
class MultiExponent {
 public:
  explicit MultiExponent(std::vector<double> q);

  int m() const { return static_cast<int>(q_.size()); }
  const std::vector<double>& values() const { return q_; }
  double operator[](int i) const { return q_[i]; }
  double max_q() const;
  double reciprocal_sum() const;

 private:
  std::vector<double> q_;
};

/// Convex decomposition of 1/q_j between 1/lambda and 1/s: the j-th vertex
/// exponent equals s in every slot except slot j, which holds lambda.
struct InterpolationDecomposition {
  double s = 0.0;
  double lambda = 0.0;
  std::vector<double> thetas;
  std::vector<std::vector<double>> vertices;
  ExtendedReal p = ExtendedReal::infinity();
};

enum class SumMode { EQUALITY, INEQUALITY };

/// 2mp/(mp+p-2m); the optimal Hardy-Littlewood exponent. p >= 2m, p = inf
/// gives the Bohnenblust-Hille exponent 2m/(m+1).
double hl_critical_exponent(int m, ExtendedReal p);

/// |sum 1/q_i - (m+1)/2| <= tol.
bool bh_admissible(const MultiExponent& q, double tol = 1e-9);

/// Every q_i in [p/(p-m), 2] and sum 1/q_i = (mp+p-2m)/(2p) within tol
/// (equality mode) or <= RHS + tol (inequality mode). Equality mode requires
/// p > 2m (or inf); inequality mode accepts p >= 2m.
bool hl_admissible(const MultiExponent& q, ExtendedReal p, double tol = 1e-9,
                   SumMode mode = SumMode::EQUALITY);

/// Throwing variants naming the violated constraint (sum mismatch before
/// range violation when both fail).
void require_bh_admissible(const MultiExponent& q, double tol = 1e-9);
void require_hl_admissible(const MultiExponent& q, ExtendedReal p, double tol = 1e-9);

/// lambda_{0,s} = 2s/(ms+s+2-2m) for s in [(2m-2)/m, 2].
double lambda_0(int m, double s);

/// lambda_{m,s} = 2ps/(mps+ps+2p-2mp-2ms) for p > 2m and
/// s in [(2mp-2p)/(mp-2m), 2]; p = inf reduces to lambda_0.
double lambda_m(int m, ExtendedReal p, double s);

/// The ladder lambda_{j,s} = lambda_0 * p / (p - lambda_0 * j), j = 0..m,
/// for finite p > 2m and s in the lambda_0 domain.
std::vector<double> lambda_ladder(int m, ExtendedReal p, double s);

/// (2m^2-4m+2)/(m^2-m-1), the max-q cutoff between the two generalized cases.
double max_q_threshold(int m);

/// Decomposition with weights theta_j = lambda(s-q_j)/(q_j(s-lambda)).
/// Preconditions: hl_admissible(q, p) in equality mode; s in (max q_i, 2]
/// (default: the midpoint (max q_i + 2)/2).
InterpolationDecomposition interpolation_weights(const MultiExponent& q, ExtendedReal p,
                                                 std::optional<double> s = std::nullopt,
                                                 double tol = 1e-9);

/// Upper bound for the generalized (mixed-exponent) BH constant:
/// max q_i < max_q_threshold: the uniform product bound; otherwise
/// K^(2(m-1)((m+1)/2 - m/maxq)) * bh_upper^(m(2/maxq - 1)) with K = sqrt(2)
/// (REAL) or 2/sqrt(pi) (COMPLEX).
BoundReport gen_bh_upper(const MultiExponent& q, ScalarField field, double tol = 1e-9);

/// The earlier COMPLEX-only bound this library's sorted-exponent formula
/// improves on; requires q sorted ascending.
BoundReport gen_bh_upper_prior(const MultiExponent& q, double tol = 1e-9);

/// Generalized Hardy-Littlewood upper bound; same case split as gen_bh_upper
/// (the displayed bound is p-free), with admissibility checked against p.
BoundReport gen_hl_upper(const MultiExponent& q, ExtendedReal p, ScalarField field,
                         double tol = 1e-9);

}  // namespace bhhl
