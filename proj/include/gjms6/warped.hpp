#pragma once

#include "gjms6/model_geometry.hpp"
#include "gjms6/series.hpp"

namespace gjms6 {

// g = ds^2 + rho(s)^2 h0 near the boundary s = 0, with h0 of constant
// sectional curvature kappa (0 or 1) and s the inward distance. eta = -d/ds.
struct WarpedGeometry {
  int n = 0;
  Rational kappa;
  int K = 0;
  Series<Rational> rho;

  // curvature series, filled by finish()
  Series<Rational> mean;  // n rho'/rho
  Series<Rational> rho_m2;
  Series<Rational> J, PN, PT, Psq;

  void finish();

  Rational H() const { return -Rational(n) * rho.deriv_at0(1); }
  Rational Jbar() const { return Rational(n) * kappa / 2; }
  Rational PbarSq() const { return Rational(n) * kappa * kappa / 4; }
};

WarpedGeometry warped_model(const ModelGeometry& g, int K = 14);
// warped metric over the round sphere in the normal form of the symmetry
// argument: H = 0, P(eta,eta) = Jbar/3, eta J = 0 and the two Laplacian
// conditions on J
WarpedGeometry normal_form_warped(int n, int K = 14);
WarpedGeometry warped_from_rho(int n, const Rational& kappa, const Series<Rational>& rho);

template <class T>
struct ModeVal {
  T v = T(0);
  bool lin = false;  // true: multiple of the boundary harmonic, false: constant

  ModeVal() = default;
  ModeVal(const T& x, bool l) : v(x), lin(l) {}

  static bool merge(const ModeVal& a, const ModeVal& b) {
    if (a.lin == b.lin) return a.lin;
    if (a.v == T(0)) return b.lin;
    if (b.v == T(0)) return a.lin;
    throw std::logic_error("ModeVal: adding a constant to a harmonic term");
  }
  ModeVal& operator+=(const ModeVal& o) {
    lin = merge(*this, o);
    v += o.v;
    return *this;
  }
  ModeVal& operator-=(const ModeVal& o) {
    lin = merge(*this, o);
    v -= o.v;
    return *this;
  }
  friend ModeVal operator+(ModeVal a, const ModeVal& b) { return a += b; }
  friend ModeVal operator-(ModeVal a, const ModeVal& b) { return a -= b; }
  ModeVal operator-() const { return ModeVal(-v, lin); }
  friend ModeVal operator*(const ModeVal& a, const ModeVal& b) {
    if (a.lin && b.lin && a.v != T(0) && b.v != T(0))
      throw std::logic_error("ModeVal: product of two harmonic terms");
    return ModeVal(a.v * b.v, a.lin || b.lin);
  }
  friend ModeVal operator*(const Rational& c, const ModeVal& a) { return ModeVal(from_rat<T>(c) * a.v, a.lin); }
};

template <class T>
struct ModeSeries {
  Series<T> s;
  bool lin = false;

  ModeSeries() = default;
  ModeSeries(Series<T> x, bool l) : s(std::move(x)), lin(l) {}
  ModeSeries& operator+=(const ModeSeries& o) {
    s += o.s;
    lin = lin || o.lin;
    return *this;
  }
  ModeSeries& operator-=(const ModeSeries& o) {
    s -= o.s;
    lin = lin || o.lin;
    return *this;
  }
  friend ModeSeries operator+(ModeSeries a, const ModeSeries& b) { return a += b; }
  friend ModeSeries operator-(ModeSeries a, const ModeSeries& b) { return a -= b; }
  friend ModeSeries operator*(const Rational& c, ModeSeries a) {
    a.s *= from_rat<T>(c);
    return a;
  }
};

// Context for BoundaryFormulas acting on u = F(s) Y with Y a boundary
// eigenfunction, Lap-bar Y = -lambda Y. Curvature terms are constant along
// the boundary, so every pairing of a gradient with a curvature gradient
// vanishes.
template <class T>
class WarpedModeCtx {
 public:
  using F = ModeSeries<T>;
  using B = ModeVal<T>;

  WarpedModeCtx(const WarpedGeometry& g, const T& lambda) : g_(g), lambda_(lambda) {
    mean_ = g.mean.template cast<T>();
    rho_m2_ = g.rho_m2.template cast<T>();
    J_ = g.J.template cast<T>();
    PN_ = g.PN.template cast<T>();
    PT_ = g.PT.template cast<T>();
    Psq_ = g.Psq.template cast<T>();
  }

  int K() const { return g_.K; }
  const WarpedGeometry& geometry() const { return g_; }
  const T& lambda() const { return lambda_; }

  F mode(const Series<T>& s) const { return F(s, true); }

  B cst(const Rational& c) const { return B(from_rat<T>(c), false); }
  F lap(const F& f) const {
    Series<T> d1 = f.s.d();
    Series<T> out = d1.d() + mean_ * d1;
    if (f.lin) out -= lambda_ * (rho_m2_ * f.s);
    return F(out, f.lin);
  }
  B bdry(const F& f) const { return B(f.s.at0(), f.lin); }
  B eta(const F& f) const { return B(-f.s.deriv_at0(1), f.lin); }
  B hessNN(const F& f) const { return B(f.s.deriv_at0(2), f.lin); }

  B lapBar(const B& b) const { return b.lin ? B(-lambda_ * b.v, true) : B(T(0), false); }
  B gradDot(const B& a, const B& b) const { return pair(a, b); }
  B hessDot(const B& a, const B& b) const { return pair(a, b); }
  B pbarGrad(const B& a, const B& b) const { return pair(a, b); }
  B divPbarGrad(const B& a) const { return (g_.kappa / 2) * lapBar(a); }
  B pbarHess(const B& a) const { return (g_.kappa / 2) * lapBar(a); }

  B H() const { return cst(g_.H()); }
  B Pnn() const { return B(PN_.at0(), false); }
  B Jbar() const { return cst(g_.Jbar()); }
  B PbarSq() const { return cst(g_.PbarSq()); }
  F J() const { return F(J_, false); }
  B etaPsq() const { return B(-Psq_.deriv_at0(1), false); }
  B nablaEtaPnn() const { return B(-PN_.deriv_at0(1), false); }
  B etaPHess(const F& u) const {
    Series<T> uss = u.s.d().d();
    Series<T> lu = lap(u).s;
    Series<T> c = PN_ * uss + PT_ * (lu - uss);
    return B(-c.deriv_at0(1), u.lin);
  }

 private:
  B pair(const B& a, const B& b) const {
    if (a.lin && b.lin && a.v != T(0) && b.v != T(0))
      throw std::logic_error("WarpedModeCtx: pairing of two harmonic gradients");
    return B(T(0), false);
  }

  WarpedGeometry g_;
  T lambda_;
  Series<T> mean_, rho_m2_, J_, PN_, PT_, Psq_;
};

}  // namespace gjms6
