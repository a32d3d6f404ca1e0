#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace expsearch {

// Exact rational arithmetic for all lengths, times, masses and probabilities.
// Floating-point views exist only at the API edge.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q", integers, plain decimals ("0.25") and scientific notation
// ("1e-6"). Throws Error(Errc::parse) on malformed input.
Rat rat_parse(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& value);

double rat_double(const Rat& value);

// Fixed-point decimal rendering with k digits after the point (rounded to
// nearest, ties away from zero).
std::string rat_decimals(const Rat& value, int k);

}  // namespace expsearch
