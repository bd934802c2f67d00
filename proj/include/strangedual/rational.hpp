#ifndef STRANGEDUAL_RATIONAL_HPP
#define STRANGEDUAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace strangedual {

/// Exact arbitrary-precision integer and rational scalars.
/// Every computation in this project is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// Narrow a rational known to be integral; throws if it is not.
inline Int to_integer(const Rat& q, const char* what = "value") {
  if (!is_integer(q))
    throw std::domain_error(std::string(what) + " is not an integer: " + q.str());
  return rat_num(q);
}

inline Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  Int kk = k;
  if (n - k < kk) kk = n - k;
  for (Int i = 0; i < kk; ++i) {
    r *= (n - i);
    r /= (i + 1);  // always divides: r is binomial(n, i+1) * (i+1)! / (i+1)!
  }
  return r;
}

inline Int ipow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

/// Extended gcd: returns g = gcd(a,b) and coefficients with s*a + t*b = g.
struct ExtGcd {
  Int g, s, t;
};
inline ExtGcd ext_gcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b; b = r;
    Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
    Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
  }
  if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
  return {a, s0, t0};
}

}  // namespace strangedual

#endif
