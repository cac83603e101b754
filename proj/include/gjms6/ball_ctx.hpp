#pragma once

#include "gjms6/poly.hpp"

namespace gjms6 {

// Flat unit ball B^{n+1}, variables 0..n. Boundary fields are ambient
// polynomials whose restriction to S^n carries the value; all tangential
// operators are intrinsic, so the choice of extension does not matter.
class BallPolyCtx {
 public:
  using F = MultiPoly;
  using B = MultiPoly;
  explicit BallPolyCtx(int n) : n_(n), d_(n + 1) {}

  int n() const { return n_; }
  B cst(const Rational& c) const { return MultiPoly::constant(c); }
  F lap(const F& f) const { return laplacian(f, d_); }
  B bdry(const F& f) const { return f; }
  B eta(const F& f) const { return euler(f, d_); }
  B hessNN(const F& f) const;
  B lapBar(const B& b) const;
  B gradDot(const B& a, const B& b) const;
  B hessDot(const B& a, const B& b) const;
  B pbarGrad(const B& a, const B& b) const { return rat(1, 2) * gradDot(a, b); }
  B divPbarGrad(const B& a) const { return rat(1, 2) * lapBar(a); }
  B pbarHess(const B& a) const { return rat(1, 2) * lapBar(a); }
  B H() const { return cst(n_); }
  B Pnn() const { return B(); }
  B Jbar() const { return cst(rat(n_, 2)); }
  B PbarSq() const { return cst(rat(n_, 4)); }
  F J() const { return F(); }
  B etaPsq() const { return B(); }
  B nablaEtaPnn() const { return B(); }
  B etaPHess(const F&) const { return B(); }

 private:
  int n_, d_;
};

}  // namespace gjms6
