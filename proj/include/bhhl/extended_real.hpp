#pragma once

#include <string>
#include <string_view>

namespace bhhl {

/// A strictly positive real number or positive infinity. Infinity is a tagged
/// state, not a sentinel double, so every consumer has to treat the p = inf
/// case explicitly.
class ExtendedReal {
 public:
  static ExtendedReal finite(double v);
  static ExtendedReal infinity() noexcept;

  /// Accepts "inf" (case-insensitive) or a positive decimal number.
  static ExtendedReal parse(std::string_view token);

  bool is_infinite() const noexcept { return infinite_; }

  /// Finite value; throws std::logic_error when infinite.
  double value() const;

  bool gt(double x) const noexcept { return infinite_ || value_ > x; }
  bool ge(double x) const noexcept { return infinite_ || value_ >= x; }

  bool operator==(const ExtendedReal& o) const noexcept {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }

  /// "inf" or a round-trippable decimal rendering.
  std::string str() const;

 private:
  ExtendedReal(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace bhhl
