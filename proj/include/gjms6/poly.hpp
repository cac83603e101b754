#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gjms6/rational.hpp"

namespace gjms6 {

constexpr int kMaxVars = 16;
using Exponent = std::array<uint8_t, kMaxVars>;

// Per-variable degree caps used by truncated products. 255 means uncapped.
struct DegreeCap {
  std::array<uint8_t, kMaxVars> cap;
  DegreeCap() { cap.fill(255); }
  DegreeCap& set(int var, int deg) {
    cap[var] = uint8_t(deg);
    return *this;
  }
  bool admits(const Exponent& e) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > cap[i]) return false;
    return true;
  }
  bool trivial() const {
    for (auto c : cap)
      if (c != 255) return false;
    return true;
  }
};

class MultiPoly {
 public:
  explicit MultiPoly(int nvars = kMaxVars);
  static MultiPoly constant(const Rational& c, int nvars = kMaxVars);
  static MultiPoly variable(int i, int nvars = kMaxVars);
  static MultiPoly monomial(const Exponent& e, const Rational& c, int nvars = kMaxVars);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Exponent& e) const;
  int degree(int var) const;
  int total_degree() const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  static MultiPoly mul(const MultiPoly& a, const MultiPoly& b, const DegreeCap& cap);

  MultiPoly diff(int var) const;
  MultiPoly truncated(const DegreeCap& cap) const;
  // substitute var := value
  MultiPoly at(int var, const Rational& value) const;
  // substitute var := q, truncating with cap
  MultiPoly substitute(int var, const MultiPoly& q, const DegreeCap& cap = DegreeCap()) const;
  // part of given degree in the listed variables
  MultiPoly part_of_degree(const std::vector<int>& vars, int deg) const;
  // coefficient polynomial of var^k
  MultiPoly coeff_of(int var, int k) const;

  double eval(const std::vector<double>& x) const;
  Rational eval_exact(const std::vector<Rational>& x) const;

  std::string str(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  int nvars_;
  std::map<Exponent, Rational> terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Rational& c, MultiPoly a);
MultiPoly operator*(MultiPoly a, const Rational& c);
MultiPoly pow(const MultiPoly& a, int k, const DegreeCap& cap = DegreeCap());

// Euclidean Laplacian in the first d variables
MultiPoly laplacian(const MultiPoly& p, int d);
// sum_i x_i^2 over the first d variables
MultiPoly radius_sq(int d, int nvars = kMaxVars);
// x . grad p over the first d variables
MultiPoly euler(const MultiPoly& p, int d);

inline Exponent zero_exponent() {
  Exponent e;
  e.fill(0);
  return e;
}

}  // namespace gjms6
