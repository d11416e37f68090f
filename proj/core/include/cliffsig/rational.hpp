#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cliffsig {

// Exact rational scalar, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Renders "n" when the denominator is 1, otherwise "n/d".
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

}  // namespace cliffsig
