#pragma once

#include <string>
#include <string_view>

#include "tornheim/special.hpp"

namespace tornheim {

/// Accepts "2", "-1.5", "2.5+0.3i", "2-i", "0.5i". Throws DomainError on
/// anything else.
Complex parse_complex(std::string_view text);

/// Shortest round-trip form, "a" when the imaginary part is zero and
/// "a+bi" / "a-bi" otherwise.
std::string format_complex(Complex z);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace tornheim
