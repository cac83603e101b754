#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "gjms6/exact_poly.hpp"
#include "gjms6/model_geometry.hpp"
#include "gjms6/warped.hpp"

namespace gjms6 {

// spherical-harmonic degree ell on S^n, or flat frequency t on R^n
struct ModeIndex {
  bool flat = false;
  int ell = 0;
  Rational t;

  static ModeIndex harmonic(int l) { return {false, l, Rational(0)}; }
  static ModeIndex frequency(const Rational& t) { return {true, 0, t}; }
  // eigenvalue of -Lap-bar
  Rational lambda(int n) const { return flat ? Rational(t * t) : Rational(Rational(ell) * (ell + n - 1)); }
};

template <class T>
struct BoundaryTriple {
  T f{}, phi{}, psi{};
  T& operator[](int i) { return i == 0 ? f : (i == 1 ? phi : psi); }
  const T& operator[](int i) const { return i == 0 ? f : (i == 1 ? phi : psi); }
};
using Triple = BoundaryTriple<Rational>;

// conformal weights (n-5)/2, (n-3)/2, (n-1)/2 of the three slots
std::array<Rational, 3> triple_weights(int n);

// Closed-form L6-harmonic profiles F(s) for one mode, s the inward distance.
// Ball: r^ell, r^{ell+2}, r^{ell+4} with r = 1 - s. Hemisphere and hyperbolic
// model: conformal images of the ball basis. Half-space: e^{-ts} s^k.
struct ExactModeBasis {
  ModelGeometry geom;
  ModeIndex mode;
  WarpedGeometry w;
  Rational lambda;
  std::array<Series<Rational>, 3> basis;
};

ExactModeBasis exact_mode_basis(const ModelGeometry& g, const ModeIndex& m, int K = 16);

using Mat3 = std::array<std::array<Rational, 3>, 3>;
// M[i][k] = B_{j0+i}(basis_k)
Mat3 boundary_matrix(const ExactModeBasis& b, int j0);

struct ExactSolveResult {
  std::array<Rational, 3> coeffs;
  Series<Rational> profile;
  Triple achieved;
  Triple neumann;  // (B5, B4, B3) of the solution, paired with (f, phi, psi)
};

// throws std::domain_error on a degenerate mode
ExactSolveResult solve_mode_exact(const ExactModeBasis& b, const Triple& data);
ExactSolveResult ball_mode_solve(int n, int ell, const Triple& data);
ExactSolveResult halfspace_solve(const Rational& t, const Triple& data, int n = 7);

// symbolic half-space solve over Q(t): data are polynomials (in t and free
// parameters); returns e^{-ty}(a + b y + c y^2)
struct HalfspaceSymbolic {
  MultiPoly a, b, c;
  ExpPolyMode mode;
};
HalfspaceSymbolic halfspace_solve(const BoundaryTriple<MultiPoly>& data);

bool kernel_check(const ModelGeometry& g, const ModeIndex& m);

// Hemisphere per-factor Chebyshev collocation. Profiles are u = sin^ell(theta)
// w(cos theta), z = cos theta in [0, 1], z = 0 the boundary.
struct CollocationConfig {
  int N = 64;
  double cond_guard = 1e12;
  double tol = 1e-10;
};

struct ModeField {
  int n = 0, ell = 0;
  std::vector<double> z;
  Eigen::VectorXd w;
  Eigen::VectorXd dw;  // dw/dz at the nodes
  // barycentric interpolation of w (or dw/dz) at z
  double w_at(double zz) const;
  double dw_at(double zz) const;
  double operator()(double theta) const;
};

struct HemisphereSolveResult {
  ModeField profile;
  std::array<ModeField, 3> factors;  // w_k(0) = 1, (-Lap + c_k) u_k = 0
  std::array<double, 3> coeffs{};
  BoundaryTriple<double> achieved;
  BoundaryTriple<double> neumann;
  double cond = 0;
};

HemisphereSolveResult hemisphere_mode_solve(int n, int ell, const BoundaryTriple<double>& data,
                                            const CollocationConfig& cfg = {});

// weak-form residual of prod_k (-Lap + c_k) u against test profiles
// sin^ell z^6 q(z), which vanish to sixth order at the boundary; normalised
// by ||u|| ||L6 test|| in L^2 of the hemisphere
double factorized_weak_residual(const ModeField& u, int ntests = 6);

}  // namespace gjms6
