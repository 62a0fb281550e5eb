#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <string>

namespace orbicoh {

// All exact arithmetic in the engine runs over GMP-backed arbitrary
// precision integers and rationals.  Rationals are kept canonical
// (reduced, positive denominator) by the backend.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline bool is_nonnegative_integer(const Rational& q) {
  return is_integral(q) && q >= 0;
}

// "num/den", denominator omitted when 1.  Used for all serialized output.
inline std::string rational_str(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline long long to_ll(const Integer& z) { return z.convert_to<long long>(); }

}  // namespace orbicoh
