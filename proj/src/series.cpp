#include "gjms6/series.hpp"

namespace gjms6 {

Series<Rational> series_sin(int K) {
  Series<Rational> s(K);
  Rational f = 1;
  for (int k = 1; k <= K; ++k) {
    f /= k;
    if (k % 2 == 1) s.c[k] = ((k / 2) % 2 == 0) ? f : Rational(-f);
  }
  return s;
}

Series<Rational> series_cos(int K) {
  Series<Rational> s(K);
  Rational f = 1;
  s.c[0] = 1;
  for (int k = 1; k <= K; ++k) {
    f /= k;
    if (k % 2 == 0) s.c[k] = ((k / 2) % 2 == 0) ? f : Rational(-f);
  }
  return s;
}

Series<Rational> series_binomial(const Series<Rational>& g, const Rational& a) {
  int K = g.order();
  Series<Rational> b(K);
  Rational coef = 1;
  for (int k = 0; k <= K; ++k) {
    b.c[k] = coef;
    coef = coef * (a - k) / (k + 1);
  }
  return b.compose(g);
}

Series<Rational> series_poly(int K, const std::vector<Rational>& coeffs) {
  return Series<Rational>::from_coeffs(K, coeffs);
}

}  // namespace gjms6
