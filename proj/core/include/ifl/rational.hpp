#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ifl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q" in lowest terms, denominator always explicit
/// ("1/2", "1/1", "0/1").
inline std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ifl
