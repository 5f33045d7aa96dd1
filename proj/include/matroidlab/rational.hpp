#ifndef MATROIDLAB_RATIONAL_HPP
#define MATROIDLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "matroidlab/errors.hpp"

namespace matroidlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "3", "-3", or "a/b".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw InvalidInputError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidInputError("cannot parse rational: " + s);
  }
}

}  // namespace matroidlab

#endif
