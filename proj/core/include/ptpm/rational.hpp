#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ptpm {

// All arithmetic in the engine is exact. Timestamps, guard constants and
// polyhedron coefficients are arbitrary-precision rationals; decimal input
// literals are converted exactly (0.7 == 7/10).
using Rat = mpq_class;
using Int = mpz_class;

// Canonical rational from parts; denominator must be nonzero.
Rat rat_from_parts(const Int& num, const Int& den);

// Accepts "3", "-3", "0.7", "-4.25" and fraction form "41/10".
std::optional<Rat> parse_rat(std::string_view text);

// "41/10", "7" (denominator 1 omitted).
std::string rat_to_string(const Rat& r);

// Always "num/den", e.g. "7/1". Used by the JSON serializers.
std::string rat_to_fraction(const Rat& r);

}  // namespace ptpm
