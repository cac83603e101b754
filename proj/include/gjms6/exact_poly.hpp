#pragma once

#include <vector>

#include "gjms6/model_geometry.hpp"
#include "gjms6/poly.hpp"

namespace gjms6 {

// q or q * Vol(S^n)
struct MomentScalar {
  enum class Unit { Pure, VolSn };
  Rational q;
  Unit unit = Unit::Pure;

  MomentScalar() = default;
  MomentScalar(const Rational& v, Unit u) : q(v), unit(u) {}
  static MomentScalar vol(const Rational& v) { return {v, Unit::VolSn}; }

  MomentScalar& operator+=(const MomentScalar& o);
  MomentScalar& operator-=(const MomentScalar& o);
  friend MomentScalar operator+(MomentScalar a, const MomentScalar& b) { return a += b; }
  friend MomentScalar operator-(MomentScalar a, const MomentScalar& b) { return a -= b; }
  friend MomentScalar operator*(const Rational& c, MomentScalar a) {
    a.q *= c;
    return a;
  }
  bool is_zero() const { return q == 0; }
  friend bool operator==(const MomentScalar& a, const MomentScalar& b) {
    return a.q == b.q && (a.q == 0 || a.unit == b.unit);
  }
  std::string str() const;
};

// integrals over the unit sphere S^n / unit ball B^{n+1} of a polynomial in
// the first n+1 variables
MomentScalar sphere_integral(const MultiPoly& p, int n);
MomentScalar ball_integral(const MultiPoly& p, int n);

// e^{-t y} p(t, y, ...) on the half-space. Variable 0 is t, variable 1 is y;
// other variables are free parameters. The boundary factor e^{i x.xi} with
// |xi| = t is implicit, so Lap-bar acts as -t^2.
struct ExpPolyMode {
  static constexpr int tvar = 0;
  static constexpr int yvar = 1;
  MultiPoly profile;

  ExpPolyMode() = default;
  explicit ExpPolyMode(MultiPoly p) : profile(std::move(p)) {}
  MultiPoly boundary() const { return profile.at(yvar, 0); }
};

enum class ModeOp { Dy, Lap, LapBar };
ExpPolyMode mode_apply(ModeOp op, const ExpPolyMode& m);

// Curvature of e^{2 sigma} g for flat g on the half-space (coordinates
// x_1..x_n = variables 0..n-1, y = variable n) or the ball (variables 0..n).
// Quantities with exponential prefactors are returned with the prefactor
// stripped, as noted per field.
struct ConformalCurvature {
  std::vector<std::vector<MultiPoly>> P_hat;  // coordinate components
  MultiPoly trace_P_hat;                      // J-hat = e^{-2 sigma} trace_P_hat
  MultiPoly eH_hat;                           // e^{sigma} H-hat on the boundary
  MultiPoly P_hat_eta_eta;                    // P-hat(eta, eta), flat unit normal, on the boundary
  bool weyl_zero = true;
  bool cotton_zero = true;
  bool bach_zero = true;
};

ConformalCurvature conformally_flat_curvature(const MultiPoly& sigma, const ModelGeometry& g);

// Context for BoundaryFormulas on ExpPolyMode profiles over flat half-space
class ExpModeCtx {
 public:
  using F = MultiPoly;
  using B = MultiPoly;
  explicit ExpModeCtx(int n) : n_(n) {}

  B cst(const Rational& c) const { return MultiPoly::constant(c); }
  F lap(const F& f) const;
  B bdry(const F& f) const { return f.at(ExpPolyMode::yvar, 0); }
  B eta(const F& f) const;
  B hessNN(const F& f) const;
  B lapBar(const B& b) const;
  B gradDot(const B& a, const B& b) const { return zero_pair(a, b); }
  B hessDot(const B& a, const B& b) const { return zero_pair(a, b); }
  B pbarGrad(const B& a, const B& b) const { return zero_pair(a, b); }
  B divPbarGrad(const B&) const { return B(); }
  B pbarHess(const B&) const { return B(); }
  B H() const { return B(); }
  B Pnn() const { return B(); }
  B Jbar() const { return B(); }
  B PbarSq() const { return B(); }
  F J() const { return F(); }
  B etaPsq() const { return B(); }
  B nablaEtaPnn() const { return B(); }
  B etaPHess(const F&) const { return B(); }

 private:
  B zero_pair(const B& a, const B& b) const;
  int n_;
};

}  // namespace gjms6
