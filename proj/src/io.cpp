#include "udg/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace udg {

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

namespace {
template <class T>
std::string decimal_impl(const T& x, int digits) {
  return x.str(digits, std::ios_base::fmtflags(0));
}
}  // namespace

std::string decimal_to_string(const Dec50& x, int digits) {
  return decimal_impl(x, digits);
}
std::string decimal_to_string(const Dec100& x, int digits) {
  return decimal_impl(x, digits);
}

}  // namespace udg
