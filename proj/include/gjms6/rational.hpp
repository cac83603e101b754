#pragma once

#include <gmpxx.h>

#include <string>

namespace gjms6 {

using Rational = mpq_class;

inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

// integer powers only
inline Rational pow(const Rational& base, int e) {
  Rational out = 1;
  Rational b = base;
  bool inv = e < 0;
  unsigned k = inv ? unsigned(-e) : unsigned(e);
  while (k) {
    if (k & 1u) out *= b;
    b *= b;
    k >>= 1;
  }
  if (inv) out = 1 / out;
  return out;
}

// b (b+1) ... (b+m-1) = Gamma(b+m)/Gamma(b)
inline Rational rising(const Rational& b, int m) {
  Rational out = 1;
  for (int k = 0; k < m; ++k) out *= b + k;
  return out;
}

}  // namespace gjms6
