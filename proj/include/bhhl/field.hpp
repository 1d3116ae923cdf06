#pragma once

#include <string>
#include <string_view>

namespace bhhl {

enum class ScalarField { REAL, COMPLEX };

std::string to_string(ScalarField f);

/// Accepts "real" or "complex" (case-insensitive); throws std::domain_error otherwise.
ScalarField parse_field(std::string_view token);

}  // namespace bhhl
