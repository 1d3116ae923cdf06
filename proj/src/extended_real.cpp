#include "bhhl/extended_real.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace bhhl {

ExtendedReal ExtendedReal::finite(double v) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::domain_error("ExtendedReal: finite value must be a real > 0");
  }
  return ExtendedReal(v, false);
}

ExtendedReal ExtendedReal::infinity() noexcept { return ExtendedReal(0.0, true); }

ExtendedReal ExtendedReal::parse(std::string_view token) {
  if (token == "inf" || token == "Inf" || token == "INF") {
    return infinity();
  }
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw std::domain_error("ExtendedReal: cannot parse '" + std::string(token) +
                            "' (expected a positive number or 'inf')");
  }
  return finite(v);
}

double ExtendedReal::value() const {
  if (infinite_) {
    throw std::logic_error("ExtendedReal: value() called on infinity");
  }
  return value_;
}

std::string ExtendedReal::str() const {
  if (infinite_) {
    return "inf";
  }
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace bhhl
