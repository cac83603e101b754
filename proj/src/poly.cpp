#include "gjms6/poly.hpp"

#include <cmath>
#include <sstream>

namespace gjms6 {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("MultiPoly: too many variables");
}

MultiPoly MultiPoly::constant(const Rational& c, int nvars) {
  MultiPoly p(nvars);
  p.add_term(zero_exponent(), c);
  return p;
}

MultiPoly MultiPoly::variable(int i, int nvars) {
  if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly::variable");
  Exponent e = zero_exponent();
  e[i] = 1;
  return monomial(e, 1, nvars);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c, int nvars) {
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == zero_exponent();
}

Rational MultiPoly::constant_term() const { return coeff(zero_exponent()); }

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree(int var) const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, int(e[var]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

MultiPoly MultiPoly::mul(const MultiPoly& a, const MultiPoly& b, const DegreeCap& cap) {
  MultiPoly r(std::max(a.nvars_, b.nvars_));
  if (a.is_zero() || b.is_zero()) return r;
  bool check = !cap.trivial();
  Exponent e;
  Rational prod;
  for (auto& [ea, ca] : a.terms_) {
    for (auto& [eb, cb] : b.terms_) {
      bool ok = true;
      for (int i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(ea[i]) + eb[i];
        if (s > 255) throw std::overflow_error("MultiPoly: exponent overflow");
        e[i] = uint8_t(s);
        if (check && e[i] > cap.cap[i]) ok = false;
      }
      if (!ok) continue;
      prod = ca * cb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end())
        r.terms_.emplace(e, prod);
      else
        it->second += prod;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second == 0)
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

MultiPoly MultiPoly::diff(int var) const {
  MultiPoly r(nvars_);
  for (auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.terms_.emplace(f, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::truncated(const DegreeCap& cap) const {
  MultiPoly r(nvars_);
  for (auto& [e, c] : terms_)
    if (cap.admits(e)) r.terms_.emplace(e, c);
  return r;
}

MultiPoly MultiPoly::at(int var, const Rational& value) const {
  MultiPoly r(nvars_);
  for (auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c * pow(value, e[var]));
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& q, const DegreeCap& cap) const {
  int dmax = degree(var);
  MultiPoly r(nvars_);
  if (dmax < 0) return r;
  std::vector<MultiPoly> powers;
  powers.push_back(MultiPoly::constant(1, nvars_));
  for (int k = 1; k <= dmax; ++k) powers.push_back(mul(powers.back(), q, cap));
  for (int k = 0; k <= dmax; ++k) {
    MultiPoly ck = coeff_of(var, k);
    if (ck.is_zero()) continue;
    r += mul(ck, powers[k], cap);
  }
  return r;
}

MultiPoly MultiPoly::part_of_degree(const std::vector<int>& vars, int deg) const {
  MultiPoly r(nvars_);
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int v : vars) s += e[v];
    if (s == deg) r.terms_.emplace(e, c);
  }
  return r;
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly r(nvars_);
  for (auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponent f = e;
    f[var] = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

double MultiPoly::eval(const std::vector<double>& x) const {
  double s = 0;
  for (auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) t *= std::pow(x.at(i), int(e[i]));
    s += t;
  }
  return s;
}

Rational MultiPoly::eval_exact(const std::vector<Rational>& x) const {
  Rational s = 0;
  for (auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) t *= pow(x.at(i), int(e[i]));
    s += t;
  }
  return s;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int i = 0; i < kMaxVars; ++i) {
      if (!e[i]) continue;
      os << "*" << (i < int(names.size()) ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << int(e[i]);
    }
  }
  return os.str();
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return MultiPoly::mul(a, b, DegreeCap()); }
MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }

MultiPoly pow(const MultiPoly& a, int k, const DegreeCap& cap) {
  MultiPoly r = MultiPoly::constant(1, a.nvars());
  for (int i = 0; i < k; ++i) r = MultiPoly::mul(r, a, cap);
  return r;
}

MultiPoly laplacian(const MultiPoly& p, int d) {
  if (d > p.nvars()) throw std::invalid_argument("laplacian: dimension mismatch");
  MultiPoly r(p.nvars());
  for (int i = 0; i < d; ++i) r += p.diff(i).diff(i);
  return r;
}

MultiPoly radius_sq(int d, int nvars) {
  MultiPoly r(nvars);
  for (int i = 0; i < d; ++i) {
    Exponent e = zero_exponent();
    e[i] = 2;
    r.add_term(e, 1);
  }
  return r;
}

MultiPoly euler(const MultiPoly& p, int d) {
  MultiPoly r(p.nvars());
  for (auto& [e, c] : p.terms()) {
    int s = 0;
    for (int i = 0; i < d; ++i) s += e[i];
    if (s) r.add_term(e, c * s);
  }
  return r;
}

}  // namespace gjms6
