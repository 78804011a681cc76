#include "cayley/exact.hpp"

#include "cayley/errors.hpp"

namespace cayley {

Integer factorial(int n) {
  if (n < 0) throw ParameterError("factorial of a negative number");
  Integer result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_string(const Rational& q) {
  const auto& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

}  // namespace cayley
