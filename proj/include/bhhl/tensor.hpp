#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "bhhl/errors.hpp"
#include "bhhl/field.hpp"

namespace bhhl {

/// Dense coefficient tensor of an m-linear form on n-dimensional arguments,
/// row-major by (j_1, ..., j_m). REAL tensors are stored with zero imaginary
/// parts so both fields share one representation.
class CoefficientTensor {
 public:
  CoefficientTensor(int m, int n, ScalarField field, std::vector<std::complex<double>> entries);

  static CoefficientTensor real_tensor(int m, int n, std::vector<double> entries);

  int m() const { return m_; }
  int n() const { return n_; }
  ScalarField field() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::complex<double>>& entries() const { return entries_; }

  double abs_entry(std::size_t i) const { return std::abs(entries_[i]); }
  bool is_zero() const;

  /// Real parts as a flat vector (REAL tensors only).
  std::vector<double> real_entries() const;

  /// n^m with an overflow/size guard; throws tensor_format_error when the
  /// dense tensor would exceed the supported size.
  static std::size_t dense_size(int m, int n);

  /// JSON round-trip: {"m", "n", "field", "entries", "layout": "row-major"}.
  /// REAL entries are numbers, COMPLEX entries are [re, im] pairs.
  std::string to_json() const;
  static CoefficientTensor from_json(const std::string& text);
  static CoefficientTensor load(const std::string& path);
  void save(const std::string& path) const;

 private:
  int m_;
  int n_;
  ScalarField field_;
  std::vector<std::complex<double>> entries_;
};

}  // namespace bhhl
