#pragma once

#include <array>
#include <vector>

#include "gjms6/mode_solver.hpp"
#include "gjms6/report.hpp"

namespace gjms6 {

enum class Boundary { Round, Flat };

// eigenvalue of P_{2 gamma} on one mode: Gamma(l + n/2 + gamma)/Gamma(l + n/2 - gamma)
// on the round S^n, t^{2 gamma} on R^n. gamma in {1/2, 1, ..., 3}, gamma < n/2.
Rational multiplier(Boundary b, int n, const Rational& gamma, const ModeIndex& m);

// (8/3) m_5, 8 m_3, 3 m_1
std::array<Rational, 3> dtn_constants(Boundary b, int n, const ModeIndex& m);

struct ScatteringExpansion {
  Rational T2, T4;
  Rational L2, L4;  // symbols of L2(n-s), L4(n-s) on the mode
};

// throws std::domain_error at 2s = n+2 or 2s = n+4
ScatteringExpansion scattering_T2_T4(int n, const Rational& s, Boundary b, const ModeIndex& m);

// Frobenius oracle: v = r^{n-s}(1 + f1 r + f2 r^2 + ...) solving
// -Lap_{g+} v - s(n-s) v = 0 for g+ = r^{-2}(dr^2 + h_r), with h_r the
// hyperbolic (round) or half-space (flat) model; returns f_0..f_order
std::vector<Rational> scattering_series(int n, const Rational& s, Boundary b, const ModeIndex& m, int order = 4);

Boundary boundary_of(const ModelGeometry& g);

// residuals B5 - (8/3) P5 B0, B4 - 8 P3 B1, B3 - 3 P1 B2 after solving with data
struct DtnResiduals {
  Triple exact;
  std::array<double, 3> numeric{};
};
DtnResiduals dtn_residuals(const ModelGeometry& g, const ModeIndex& m, const Triple& data);
CheckReport dtn_verify(const ModelGeometry& g, const ModeIndex& m, const Triple& data);
// hemisphere via collocation, relative residuals
CheckReport dtn_verify_collocated(int n, int ell, const BoundaryTriple<double>& data, double tol = 1e-9);
// half-space over Q(a, b, c, t): the three residual polynomials
std::array<MultiPoly, 3> dtn_symbolic_halfspace();

// per-mode boundary Gram matrix: G[a][b] = sum_{j<=2} B_j(u_a) B_{5-j}(u_b)
// with u_a the solutions of unit data; equals diag(dtn_constants)
Mat3 dtn_gram(const ModelGeometry& g, const ModeIndex& m);

// j in {1, 3, 5}: multipliers per mode from solve-then-apply; residual is
// max |G - G^T| over the modes plus the deviation from the closed form
struct SelfAdjointReport {
  CheckReport report;
  std::vector<Rational> multipliers;
};
SelfAdjointReport dtn_selfadjointness(const ModelGeometry& g, int j, const std::vector<ModeIndex>& modes);

}  // namespace gjms6
