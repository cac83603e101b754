#include "gjms6/exact_poly.hpp"

#include <stdexcept>

namespace gjms6 {

MomentScalar& MomentScalar::operator+=(const MomentScalar& o) {
  if (o.q == 0) return *this;
  if (q == 0) {
    *this = o;
    return *this;
  }
  if (unit != o.unit) throw std::logic_error("MomentScalar: unit mismatch");
  q += o.q;
  return *this;
}

MomentScalar& MomentScalar::operator-=(const MomentScalar& o) {
  MomentScalar m = o;
  m.q = -m.q;
  return *this += m;
}

std::string MomentScalar::str() const {
  std::string s = to_string(q);
  if (unit == Unit::VolSn) s += "*Vol(S^n)";
  return s;
}

namespace {

// average of x^alpha over S^n with d = n+1 ambient variables
Rational sphere_moment(const Exponent& e, int d) {
  Rational num = 1, den = 1;
  int tot = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[i] == 0) continue;
    if (i >= d) throw std::invalid_argument("sphere_integral: variable outside the ambient dimension");
    if (e[i] % 2) return 0;
    for (int k = e[i] - 1; k > 0; k -= 2) num *= k;
    tot += e[i];
  }
  for (int k = 0; k < tot / 2; ++k) den *= d + 2 * k;
  return num / den;
}

}  // namespace

MomentScalar sphere_integral(const MultiPoly& p, int n) {
  Rational s = 0;
  for (auto& [e, c] : p.terms()) s += c * sphere_moment(e, n + 1);
  return MomentScalar::vol(s);
}

MomentScalar ball_integral(const MultiPoly& p, int n) {
  Rational s = 0;
  for (auto& [e, c] : p.terms()) {
    int tot = 0;
    for (auto k : e) tot += k;
    s += c * sphere_moment(e, n + 1) / (tot + n + 1);
  }
  return MomentScalar::vol(s);
}

ExpPolyMode mode_apply(ModeOp op, const ExpPolyMode& m) {
  const int t = ExpPolyMode::tvar, y = ExpPolyMode::yvar;
  MultiPoly T = MultiPoly::variable(t);
  const MultiPoly& p = m.profile;
  switch (op) {
    case ModeOp::Dy: return ExpPolyMode(p.diff(y) - T * p);
    case ModeOp::Lap: {
      MultiPoly p1 = p.diff(y);
      return ExpPolyMode(p1.diff(y) - Rational(2) * (T * p1));
    }
    case ModeOp::LapBar: return ExpPolyMode(-(T * T * p));
  }
  throw std::logic_error("mode_apply: unknown op");
}

MultiPoly ExpModeCtx::lap(const F& f) const { return mode_apply(ModeOp::Lap, ExpPolyMode(f)).profile; }

MultiPoly ExpModeCtx::eta(const F& f) const {
  return -mode_apply(ModeOp::Dy, ExpPolyMode(f)).profile.at(ExpPolyMode::yvar, 0);
}

MultiPoly ExpModeCtx::hessNN(const F& f) const {
  ExpPolyMode d = mode_apply(ModeOp::Dy, ExpPolyMode(f));
  return mode_apply(ModeOp::Dy, d).profile.at(ExpPolyMode::yvar, 0);
}

MultiPoly ExpModeCtx::lapBar(const B& b) const { return mode_apply(ModeOp::LapBar, ExpPolyMode(b)).profile; }

MultiPoly ExpModeCtx::zero_pair(const B& a, const B& b) const {
  if (!a.is_zero() && !b.is_zero()) throw std::logic_error("ExpModeCtx: pairing of two mode gradients");
  return MultiPoly();
}

ConformalCurvature conformally_flat_curvature(const MultiPoly& sigma, const ModelGeometry& g) {
  if (!g.flat_interior()) throw std::invalid_argument("conformally_flat_curvature: flat-interior geometry required");
  int d = g.n + 1;
  ConformalCurvature out;
  std::vector<MultiPoly> ds(d);
  MultiPoly sq;
  for (int i = 0; i < d; ++i) {
    ds[i] = sigma.diff(i);
    sq += ds[i] * ds[i];
  }
  out.P_hat.assign(d, std::vector<MultiPoly>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      MultiPoly e = -sigma.diff(i).diff(j) + ds[i] * ds[j];
      if (i == j) e -= rat(1, 2) * sq;
      out.P_hat[i][j] = e;
    }
    out.trace_P_hat += out.P_hat[i][i];
  }
  Rational N = g.n;
  if (g.kind == Kind::UpperHalfSpace) {
    int y = g.n;
    // eta = -d_y, H = 0
    out.eH_hat = (N * (-ds[y])).at(y, 0);
    out.P_hat_eta_eta = out.P_hat[y][y].at(y, 0);
  } else {
    // eta = x.grad on the unit sphere, H = n; values as ambient polynomials
    out.eH_hat = MultiPoly::constant(N) + N * euler(sigma, d);
    MultiPoly pe;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) pe += MultiPoly::variable(i) * MultiPoly::variable(j) * out.P_hat[i][j];
    out.P_hat_eta_eta = pe;
  }
  return out;
}

}  // namespace gjms6
