#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace phik {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline BigInt pow_big(std::uint64_t base, std::uint64_t exponent) {
  return pow_big(BigInt(base), exponent);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// "a/b" in lowest terms, or just "a" when the denominator is 1.
inline std::string to_decimal(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline long double to_real(const BigInt& v) {
  return v.convert_to<long double>();
}

}  // namespace phik
