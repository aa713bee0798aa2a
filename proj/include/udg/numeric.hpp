#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/math/constants/constants.hpp>

#include <string>

namespace udg {

using Dec50 = boost::multiprecision::cpp_bin_float_50;
using Dec100 = boost::multiprecision::cpp_bin_float_100;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Largest decimal precision the library computes at. Requests above this are rejected.
inline constexpr int kMaxDecimalDigits = 100;

template <class T>
inline T pi_value() {
  return boost::math::constants::pi<T>();
}
template <>
inline double pi_value<double>() {
  return 3.141592653589793238462643383279502884;
}

template <class T>
inline T scalar_from_string(const std::string& s) {
  return T(s);
}
template <>
inline double scalar_from_string<double>(const std::string& s) {
  return std::stod(s);
}

template <class T>
inline double to_double(const T& x) {
  return static_cast<double>(x);
}

// "p/q" or "p"
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

std::string decimal_to_string(const Dec50& x, int digits = 50);
std::string decimal_to_string(const Dec100& x, int digits = 100);

}  // namespace udg
