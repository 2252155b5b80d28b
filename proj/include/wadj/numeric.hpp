#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wadj {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
/// 50 decimal digits (~166-bit mantissa).
using HighReal = boost::multiprecision::cpp_bin_float_50;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const HighReal& r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

inline HighReal to_high(const Rational& r) {
  return HighReal(boost::multiprecision::numerator(r)) /
         HighReal(boost::multiprecision::denominator(r));
}
inline HighReal to_high(const HighReal& r) { return r; }
inline HighReal to_high(double r) { return HighReal(r); }

template <class T>
int sign_of(const T& value) {
  return value > 0 ? 1 : (value < 0 ? -1 : 0);
}

/// Integer power for any field-like type; negative exponents invert.
template <class T>
T ipow(T base, long exponent) {
  bool invert = exponent < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  T result(1);
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return invert ? T(1) / result : result;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace wadj
