#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace trop {

using Rat = mpq_class;

/// Parses "p", "p/q" or an exact decimal like "-3.25" into a canonical rational.
/// Throws MalformedInputError on anything else (including q == 0).
Rat parse_rational(const std::string& text);

/// Canonical form "p/q" with q > 0, or just "p" when q == 1.
std::string rat_to_string(const Rat& x);

/// Largest integer <= x.
mpz_class rat_floor(const Rat& x);

/// Smallest integer >= x.
mpz_class rat_ceil(const Rat& x);

int sgn(const Rat& x);

}  // namespace trop
