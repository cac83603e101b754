#pragma once

#include <array>
#include <string>
#include <vector>

#include "gjms6/ball_ctx.hpp"
#include "gjms6/bformulas.hpp"
#include "gjms6/exact_poly.hpp"
#include "gjms6/model_geometry.hpp"
#include "gjms6/warped.hpp"

namespace gjms6 {

struct CurvatureCoefficients {
  Rational T1, T2, T3, T4c, T5;
  Rational S2, S3, S4;
  Rational R13, R23;
  // sigma4 is a one-form built from tangential gradients of curvature; it
  // vanishes on every model, recorded as a flag
  bool sigma4_zero = true;
};

CurvatureCoefficients coefficients(const ModelGeometry& g);

// bidegree (-(n-5)/2, -(n+2j-5)/2)
std::array<Rational, 2> bidegree(int j, int n);

// Exact B_j on polynomials. Half-space: x = variables 0..n-1, y = variable n,
// result is a polynomial in x. Ball: variables 0..n, result is an ambient
// polynomial whose restriction to S^n is B_j u.
MultiPoly apply_B(int j, const ModelGeometry& g, const MultiPoly& u);
// half-space mode e^{-ty} p; result is a polynomial in t (and free parameters)
MultiPoly apply_B(int j, const ModelGeometry& g, const ExpPolyMode& u);

// B_j on u = F(s) Y_ell, s the inward distance, via the warped model
template <class T>
T apply_B_mode(int j, const WarpedGeometry& w, const T& lambda, const Series<T>& F) {
  WarpedModeCtx<T> ctx(w, lambda);
  BoundaryFormulas<WarpedModeCtx<T>> bf(ctx, w.n);
  return bf.apply(j, ctx.mode(F)).v;
}

// Operator lists written as combinations of boundary jets, one list per
// specialised setting. Jets act on u = F(s) Y with Lap-bar Y = -lambda Y.
enum class Jet {
  U,          // u
  EtaU,       // eta u
  LapU,       // (Lap u)|
  EtaLapU,    // eta Lap u
  Lap2U,      // (Lap^2 u)|
  EtaLap2U,   // eta Lap^2 u
  EtaPHessU,  // eta <P, Hess u>
  HessJEtaU,  // Hess J(eta, eta) eta u
  Dr1, Dr2, Dr3, Dr4, Dr5  // d_r^k u, r the inward distance
};

struct StencilTerm {
  Rational coeff;
  int lapbar_pow = 0;  // multiplied by Lap-bar^p, i.e. (-lambda)^p
  Jet jet = Jet::U;
};
using Stencil = std::vector<StencilTerm>;

struct OperatorList {
  std::string name;
  std::array<Stencil, 6> B;
};

enum class DeltaBarConvention { Divergence, NegativeDivergence };

OperatorList halfspace_operators();
OperatorList ball_operators(int n);
OperatorList hemisphere_operators(int n);
// geodesic compactification with round conformal infinity; the operator
// delta-bar((2 Pbar - Jbar g) d) is resolved with the given sign convention
OperatorList geodesic_forms(int n, DeltaBarConvention conv = DeltaBarConvention::Divergence);
// normal-form metric over a boundary with Pbar = (kappa/2) g-bar, Jbar
// constant; kappa = 0 is the flat case
OperatorList normal_form_operators(int n, const Rational& kappa = 1);

template <class T>
T evaluate_jet(Jet jet, WarpedModeCtx<T>& ctx, const ModeSeries<T>& u) {
  switch (jet) {
    case Jet::U: return ctx.bdry(u).v;
    case Jet::EtaU: return ctx.eta(u).v;
    case Jet::LapU: return ctx.bdry(ctx.lap(u)).v;
    case Jet::EtaLapU: return ctx.eta(ctx.lap(u)).v;
    case Jet::Lap2U: return ctx.bdry(ctx.lap(ctx.lap(u))).v;
    case Jet::EtaLap2U: return ctx.eta(ctx.lap(ctx.lap(u))).v;
    case Jet::EtaPHessU: return ctx.etaPHess(u).v;
    case Jet::HessJEtaU: return from_rat<T>(ctx.geometry().J.deriv_at0(2)) * ctx.eta(u).v;
    case Jet::Dr1: return u.s.deriv_at0(1);
    case Jet::Dr2: return u.s.deriv_at0(2);
    case Jet::Dr3: return u.s.deriv_at0(3);
    case Jet::Dr4: return u.s.deriv_at0(4);
    case Jet::Dr5: return u.s.deriv_at0(5);
  }
  throw std::logic_error("evaluate_jet: unknown jet");
}

template <class T>
T evaluate_stencil(const Stencil& st, WarpedModeCtx<T>& ctx, const Series<T>& F) {
  ModeSeries<T> u = ctx.mode(F);
  T out = T(0);
  for (const auto& term : st) {
    T f = from_rat<T>(term.coeff);
    for (int p = 0; p < term.lapbar_pow; ++p) f *= -ctx.lambda();
    out += f * evaluate_jet(term.jet, ctx, u);
  }
  return out;
}

}  // namespace gjms6
