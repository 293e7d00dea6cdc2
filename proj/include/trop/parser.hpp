#pragma once

#include <string>
#include <vector>

#include "trop/poly.hpp"

namespace trop {

/// Text format, one item per line, '#' comments:
///   vars x1 x2
///   f1: 1 + 2*x1 + 1*x2 ~ 0          # root constraint
///   r1: 2 + 0*x1 >= 1*x2             # also ==, >, <=, < (reversed forms swap)
/// A term is an optional rational coefficient (default 0, the tropical unit)
/// times variable powers; exponents may be negative; negative coefficients
/// are written (-3).  Repeating a monomial inside one polynomial is an error.
PolySystem parse_system(const std::string& text);

PolySystem parse_system_file(const std::string& path);

/// Single polynomial over the given variables; used by tests and tools.
TPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace trop
