#pragma once

#include <stdexcept>
#include <string>

namespace bhhl {

/// Violated admissibility or interpolation precondition (exponent sum, exponent
/// range, interpolation parameter out of window). Kept distinct from plain
/// std::domain_error so callers can map it to a dedicated exit code.
class admissibility_error : public std::domain_error {
 public:
  explicit admissibility_error(const std::string& what) : std::domain_error(what) {}
};

/// Structurally invalid coefficient tensor input: malformed file, entry count
/// mismatch, field mismatch, or an identically zero tensor where a ratio is asked.
class tensor_format_error : public std::runtime_error {
 public:
  explicit tensor_format_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact enumeration was requested beyond the configured work cap.
class cap_exceeded_error : public std::runtime_error {
 public:
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bhhl
