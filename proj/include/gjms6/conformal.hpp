#pragma once

#include <functional>
#include <vector>

#include "gjms6/expfield.hpp"
#include "gjms6/mode_solver.hpp"
#include "gjms6/model_geometry.hpp"
#include "gjms6/report.hpp"

namespace gjms6 {

// Half-space probes use x = variables 0, 1 (the other n-2 boundary
// directions enter through dimension counts) and y = variable 2.
constexpr int kProbeY = 2;
constexpr int kProbeEps = 3;

struct VariationProbe {
  Rational w;  // density weight, -(n-5)/2
  MultiPoly sigma;
  int order = 12;  // truncation in y
};

// eps-coefficient of e^{-(w-j) eps sigma} B_j^{e^{2 eps sigma} g}(e^{w eps sigma} u) - B_j(u),
// i.e. the first variation at the flat metric. H = 0 there, so terms
// quadratic in H have zero first variation and are not tested by this.
EField infinitesimal_covariance_residual(int j, const VariationProbe& p, const MultiPoly& u, const ModelGeometry& g,
                                         bool printed_b4 = false);

// Bhat_j(u) - e^{-((n+2j-5)/2) sigma} B_j(e^{((n-5)/2) sigma} u), exponentials kept exact.
// printed_b4 selects the typeset B4 coefficients (a negative control)
EField finite_covariance_residual(int j, const MultiPoly& sigma, const MultiPoly& u, const ModelGeometry& g,
                                  int order = 12, bool printed_b4 = false);

// n = 5: e^{j sigma} That_j - T_j - B_j(sigma)
EField critical_T_shift(int j, const MultiPoly& sigma, const ModelGeometry& g, int order = 12);

// Stereographic projection R^n -> S^n, xi = (2x, |x|^2 - 1)/(1 + |x|^2);
// d theta^2 = (2/(1 + |x|^2))^2 dx^2
using Point = std::vector<double>;
Point stereo_to_sphere(const Point& x);
Point sphere_to_stereo(const Point& xi);

using BoundaryFn = std::function<double(const Point&)>;

enum class Transport { SphereToFlat, FlatToSphere, HemisphereToBall, BallToHemisphere };

// density of weight w: f(x) = (2/(1+|x|^2))^w f_S(xi(x)) and back. Between
// hemisphere and ball the boundary map is the identity with conformal
// factor 1 there, so every slot is unchanged.
BoundaryFn cayley_transport(const BoundaryFn& f, const Rational& weight, Transport dir);
// slots with weights (n-5)/2, (n-3)/2, (n-1)/2
BoundaryTriple<BoundaryFn> cayley_transport(const BoundaryTriple<BoundaryFn>& d, int n, Transport dir);
// pull-back of the round probability measure: (1/Vol(S^n)) ((1+|x|^2)/2)^{-n}
double round_measure_density(const Point& x, int n);

// boundary jet of the normal-form factor: u = sum c_k s^k, s the inward
// distance. n > 5: B_0(u) = 1, B_j(u) = 0; n = 5: B_0(u) = 0, T_j + B_j(u) = 0.
struct BoundaryJet {
  int order = 5;
  std::vector<Rational> c;
  Rational eta_derivative(int k) const;  // eta^k u at the boundary, eta = -d/ds
};
BoundaryJet normalize_jet(const ModelGeometry& g);
// B_1..B_5 (plus T_j when n = 5) of the jet, per j; all zero for a normal-form jet
std::vector<Rational> normal_form_defect(const ModelGeometry& g, const BoundaryJet& jet);

}  // namespace gjms6
