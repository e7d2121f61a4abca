#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace okb {

// Exact rational scalar. Always in lowest terms with positive denominator
// (the backend canonicalizes on every operation); arithmetic never rounds.
using Rat = boost::multiprecision::mpq_rational;

// Arbitrary-precision integer, used internally for fraction-free elimination.
using Int = boost::multiprecision::mpz_int;

// Renders "p" for integers, "p/q" otherwise (canonical form).
std::string to_string(const Rat& r);

// Parses "p" or "p/q" with optional leading sign; q must be a positive
// integer literal. Throws InputError on anything else (including floats).
Rat rat_from_string(std::string_view s);

}  // namespace okb
