#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace flagein {

// All exact arithmetic in the library runs on unbounded rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// x^e for integer e (e may be negative; x must be nonzero then).
inline Rat rat_pow(const Rat& x, long long e) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (e == 0) return Rat(1);
  const unsigned long long a = e > 0 ? static_cast<unsigned long long>(e)
                                     : static_cast<unsigned long long>(-e);
  Int num = pow(numerator(x), static_cast<unsigned>(a));
  Int den = pow(denominator(x), static_cast<unsigned>(a));
  if (e < 0) num.swap(den);
  return Rat(num, den);
}

// Canonical "p" / "p/q" rendering used by every output format.
inline std::string rat_str(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline double rat_double(const Rat& x) { return static_cast<double>(x); }

inline int rat_sign(const Rat& x) { return x.sign(); }

}  // namespace flagein
