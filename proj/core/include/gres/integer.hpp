#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gres {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// lcm(a, 0) = 0.
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Least nonnegative residue; modulus 0 means no reduction.
inline Integer reduce(const Integer& a, const Integer& modulus) {
  if (modulus == 0) return a;
  Integer r = a % modulus;
  if (r < 0) r += modulus;
  return r;
}

/// Floor division for a nonzero divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace gres
