#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayley {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);
Integer binomial(int n, int k);

inline double to_double(const Rational& q) {
  return boost::multiprecision::numerator(q).convert_to<double>() /
         boost::multiprecision::denominator(q).convert_to<double>();
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

}  // namespace cayley
