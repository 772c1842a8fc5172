#pragma once

// Exact rational scalars. Everything in this library computes over Q with
// arbitrary-precision integers; no operation ever rounds. Values are kept
// reduced with a positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "polyenum/errors.hpp"

namespace polyenum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// num/den reduced to lowest terms; den may be negative but not zero.
Rat make_rat(Int num, Int den);

// Parses "p" or "p/q" with optional sign. Throws validation_error on
// anything else (including a zero denominator).
Rat parse_rat(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

}  // namespace polyenum
