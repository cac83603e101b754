#pragma once

#include <array>
#include <functional>
#include <vector>

#include "gjms6/fractional.hpp"
#include "gjms6/model_geometry.hpp"
#include "gjms6/rational.hpp"
#include "gjms6/report.hpp"

namespace gjms6 {

double sphere_volume(int n);  // Vol(S^n)

// C_{n,gamma} = coeff * Vol(S^n)^vol_power
struct SharpConstant {
  int n = 0;
  Rational gamma;
  Rational coeff;      // Gamma((n + 2 gamma)/2) / Gamma((n - 2 gamma)/2)
  Rational vol_power;  // 2 gamma / n
  double value() const;
};

// throws std::domain_error for gamma >= n/2 (critical: use the log branch)
SharpConstant sharp_constant(int n, const Rational& gamma);

// w == 1: oint w P w = m(0) Vol and C ||1||_p^2 = coeff Vol^{2g/n + (n-2g)/n};
// compares the coefficients and the Vol exponents exactly
struct ExactEquality {
  Rational lhs_coeff, rhs_coeff, lhs_vol_power, rhs_vol_power;
  bool equal = false;
};
ExactEquality constant_equality(int n, const Rational& gamma);

// zonal w(t), t = x.e on S^n, expanded in Gegenbauer C_l^{(n-1)/2}
struct ZonalExpansion {
  int n = 0;
  std::vector<double> coeff;   // w = sum c_l C_l(t)
  std::vector<double> energy;  // oint |Pi_l w|^2
  std::vector<double> norm;    // oint C_l(x.e)^2
  double l2_sq = 0;            // oint w^2 by quadrature
  double tail = 0;             // l2_sq - sum energy
};
ZonalExpansion zonal_expand(int n, const std::function<double(double)>& w, int lmax = 32, int nq = 256);

// oint F(x.e) over S^n
double zonal_integral(int n, const std::function<double(double)>& F, int nq = 256);

struct InequalityReport {
  double lhs = 0, rhs = 0, gap = 0, relative_gap = 0;
  double lhs_display = 0;  // second route when available, else equal to lhs
  bool has_display = false;
  std::array<double, 3> lhs_slots{}, rhs_slots{};  // f, phi, psi
  double tail = 0;                                 // worst weighted tail estimate
  CheckReport report;
};

struct TraceConfig {
  int lmax = 32;
  int nq = 256;
  double tol = 1e-6;       // on |relative gap| for extremal runs
  double tail_tol = 1e-9;  // relative weighted tail guard
};

// oint w P_{2 gamma} w - C ||w||_{2n/(n - 2 gamma)}^2 for zonal w;
// domain_error if the expansion is under-resolved
InequalityReport sphere_sobolev_check(int n, const Rational& gamma, const std::function<double(double)>& w,
                                      const TraceConfig& cfg = {});

// one slot's data. On the ball and hemisphere centers lie on a common axis
// e1 and `center` is the signed position of x0 along it (|x0| < 1). On the
// half-space x0 = center e1 in R^n with scale eps.
struct ExtremalSpec {
  enum class Shape { PowerBubble, LogBubble };
  Shape kind = Shape::PowerBubble;
  double a = 1;
  double center = 0;
  double eps = 1;
};

// slot data as functions. sphere: zonal profile on S^n (for the half-space,
// the transported profile about the slot's own axis). flat: half-space only,
// f(x) as a function of (x.e1, |x|); flat_scale sets the radial map.
struct SlotField {
  std::function<double(double)> sphere;
  std::function<double(double, double)> flat;
  double flat_scale = 1;
};

// weights of the three slots: (n-5)/2, (n-3)/2, (n-1)/2
Rational slot_weight(int n, int slot);

// extremal data for slot 0..2; LogBubble only in slot 0 with n = 5
SlotField extremal_field(Kind geom, int n, int slot, const ExtremalSpec& s);
// half-space: radial profile g(|x|) about 0, transported to the sphere
SlotField halfspace_radial_field(int n, int slot, std::function<double(double)> g);

// subcritical corollary check for Kind::UpperHalfSpace, EuclideanBall or RoundHemisphere
// (n >= 6). Multiplier route always; display route on the ball/hemisphere.
InequalityReport corollary_check(Kind geom, int n, const std::array<SlotField, 3>& slots,
                                 const TraceConfig& cfg = {});
InequalityReport corollary_check(Kind geom, int n, const std::array<ExtremalSpec, 3>& specs,
                                 const TraceConfig& cfg = {});

// n = 5: f enters through (128/5) Vol(S^5) ln oint e^{5(f - fbar)} dmu
InequalityReport critical_check(Kind geom, const std::array<SlotField, 3>& slots, const TraceConfig& cfg = {});
InequalityReport critical_check(Kind geom, const std::array<ExtremalSpec, 3>& specs,
                                const TraceConfig& cfg = {});

// hemisphere n = 5: max factorized weak residual of the per-mode extensions
// of the given data, l <= lmax
double hemisphere_critical_residual(const std::array<SlotField, 3>& slots, int lmax = 32, int nq = 256);

}  // namespace gjms6
