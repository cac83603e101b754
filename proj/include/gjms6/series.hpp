#pragma once

#include <stdexcept>
#include <vector>

#include "gjms6/rational.hpp"

namespace gjms6 {

template <class T>
T from_rat(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>)
    return r;
  else
    return T(r.get_d());
}

// Truncated power series in one variable. Coefficients with index < valid are
// exact; derivatives lower `valid` by one.
template <class T>
struct Series {
  std::vector<T> c;
  int valid = 0;

  Series() = default;
  explicit Series(int K) : c(K + 1, T(0)), valid(K + 1) {}
  static Series from_coeffs(int K, const std::vector<T>& a) {
    Series s(K);
    for (std::size_t i = 0; i < a.size() && int(i) <= K; ++i) s.c[i] = a[i];
    return s;
  }
  int order() const { return int(c.size()) - 1; }

  T at0() const {
    if (valid < 1) throw std::runtime_error("Series: truncation too shallow");
    return c[0];
  }
  // k-th derivative at 0
  T deriv_at0(int k) const {
    if (valid < k + 1) throw std::runtime_error("Series: truncation too shallow");
    T f = T(1);
    for (int i = 2; i <= k; ++i) f *= T(i);
    return f * c[k];
  }

  Series d() const {
    Series r(order());
    for (int k = 0; k < order(); ++k) r.c[k] = T(k + 1) * c[k + 1];
    r.valid = valid - 1;
    return r;
  }

  Series& operator+=(const Series& o) {
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
    valid = std::min(valid, o.valid);
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
    valid = std::min(valid, o.valid);
    return *this;
  }
  Series& operator*=(const T& a) {
    for (auto& x : c) x *= a;
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const T& s) { return a *= s; }
  friend Series operator*(const T& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b) {
    int K = a.order();
    Series r(K);
    for (int i = 0; i <= K; ++i) {
      if (a.c[i] == T(0)) continue;
      for (int j = 0; i + j <= K; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.valid = std::min(a.valid, b.valid);
    return r;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }

  Series inverse() const {
    if (c[0] == T(0)) throw std::domain_error("Series::inverse: zero constant term");
    int K = order();
    Series r(K);
    r.c[0] = T(1) / c[0];
    for (int k = 1; k <= K; ++k) {
      T s = T(0);
      for (int j = 1; j <= k; ++j) s += c[j] * r.c[k - j];
      r.c[k] = -s / c[0];
    }
    r.valid = valid;
    return r;
  }

  // f(g(s)) with g(0) = 0
  Series compose(const Series& g) const {
    if (g.c[0] != T(0)) throw std::domain_error("Series::compose: inner series must vanish at 0");
    int K = order();
    Series r(K), p(K);
    p.c[0] = T(1);
    for (int k = 0; k <= K; ++k) {
      if (c[k] != T(0)) r += c[k] * p;
      p = p * g;
    }
    r.valid = std::min(valid, g.valid);
    return r;
  }

  template <class U>
  Series<U> cast() const {
    Series<U> r(order());
    for (std::size_t k = 0; k < c.size(); ++k) {
      if constexpr (std::is_same_v<T, Rational> && !std::is_same_v<U, Rational>)
        r.c[k] = U(c[k].get_d());
      else
        r.c[k] = U(c[k]);
    }
    r.valid = valid;
    return r;
  }
};

// elementary series with rational coefficients
Series<Rational> series_sin(int K);
Series<Rational> series_cos(int K);
// (1 + g)^a for g(0) = 0, rational a
Series<Rational> series_binomial(const Series<Rational>& g, const Rational& a);
Series<Rational> series_poly(int K, const std::vector<Rational>& coeffs);

}  // namespace gjms6
