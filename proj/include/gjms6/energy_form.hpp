#pragma once

#include <vector>

#include "gjms6/exact_poly.hpp"
#include "gjms6/fractional.hpp"
#include "gjms6/mode_solver.hpp"
#include "gjms6/report.hpp"

namespace gjms6 {

template <class S>
struct EnergyReport {
  S interior{}, boundary{}, total{};
  bool exact = true;
};

// Q6(u, v) = int u L6 v + sum_{j<=2} oint B_j(u) B_{5-j}(v) on the flat ball,
// polynomial u, v in variables 0..n; values are rational multiples of Vol(S^n)
EnergyReport<MomentScalar> q6_form(const ModelGeometry& g, const MultiPoly& u, const MultiPoly& v);
MomentScalar symmetry_residual(const ModelGeometry& g, const MultiPoly& u, const MultiPoly& v);

// half-space mode e^{-ty} p(y) times a boundary mode of frequency t > 0;
// values per unit oint Y^2
struct ExpMode {
  Rational t;
  std::vector<Rational> p;
};
EnergyReport<Rational> q6_form(int n, const ExpMode& u, const ExpMode& v);

// F_I + F_B split of the symmetry argument; needs a normal-form metric, so
// only the half-space is accepted
struct BilinearDecomposition {
  Rational FI, FB;
};
BilinearDecomposition fi_fb_decompose(const ModelGeometry& g, const ExpMode& u, const ExpMode& v);

// (8/3) m5 f^2 + 8 m3 phi^2 + 3 m1 psi^2 for one mode
Rational multiplier_energy(Boundary b, int n, const ModeIndex& m, const Triple& d);

// u = R(r) Y_l on the ball with R = sum_p c[p] r^p
struct RadialMode {
  int ell = 0;
  std::vector<Rational> c;
};
// int |grad Lap u|^2 / oint Y^2 (oint over the unit sphere)
Rational ball_grad_lap_sq(int n, const RadialMode& u);
Rational ball_l2_sq(int n, const RadialMode& u);

// energy of the L6-harmonic extension of one mode through the explicit
// corollary display (interior |grad Lap u|^2 plus boundary terms in f, phi, psi)
Rational ball_display_energy(int n, int ell, const Triple& d);
double hemisphere_display_energy(int n, int ell, const BoundaryTriple<double>& d, const CollocationConfig& cfg = {});

struct DirichletEigenEstimate {
  double lambda_lower = 0;
  std::vector<int> modes_checked;
  std::vector<double> per_mode;
  bool definite = true;  // exact LDL^T pivots all positive
};
// Galerkin on zero-data profiles (1 - r^2)^3 r^l p(r^2), deg p < N, exact
// Gram matrices; flat ball only
DirichletEigenEstimate dirichlet_eigen_lower(const ModelGeometry& g, const std::vector<int>& ells, int N = 16);

// u0 = L6-harmonic extension of one-mode data on the ball (Y a harmonic
// polynomial of degree ell); perturbations v = (1 - |x|^2)^3 q
struct LowerBoundResult {
  CheckReport report;
  std::vector<Rational> gaps;  // in units of Vol(S^n)
  Rational energy, predicted;  // E6(u0) and the multiplier value
};
LowerBoundResult trace_lower_bound_check(int n, int ell, const MultiPoly& Y, const Triple& data,
                                         const std::vector<MultiPoly>& q);

}  // namespace gjms6
