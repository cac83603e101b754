#pragma once

#include <string>
#include <vector>

#include "gjms6/rational.hpp"

namespace gjms6 {

enum class Kind { UpperHalfSpace, EuclideanBall, RoundHemisphere, HyperbolicGeodesic };

std::string kind_name(Kind k);
// accepts halfspace/upper, ball, hemisphere, hyperbolic
Kind parse_kind(const std::string& s);

struct ModelGeometry {
  Kind kind;
  int n;  // boundary dimension, total dimension n+1
  ModelGeometry(Kind k, int dim);
  bool flat_interior() const { return kind == Kind::UpperHalfSpace || kind == Kind::EuclideanBall; }
  bool round_boundary() const { return kind != Kind::UpperHalfSpace; }
};

struct BoundaryGeometryData {
  Rational H;
  Rational A0_norm_sq;
  Rational P_eta_eta;
  Rational Jbar;
  Rational Pbar_coeff;  // Pbar = c * gbar
  bool fialkow_zero = true;
  Rational eta_J, delta_J, eta_delta_J;
  Rational J;        // interior J at the boundary
  Rational Pbar_sq;  // |Pbar|^2 = n c^2
};

BoundaryGeometryData boundary_data(const ModelGeometry& g);

// weyl_eta and cotton_eta are n x n slices W(eta,.,eta,.) and C(eta,.,.) in a
// boundary frame, row-major
bool coronal_check(const BoundaryGeometryData& d, const std::vector<Rational>& weyl_eta,
                   const std::vector<Rational>& cotton_eta, int n);

// h_r = sum_k h_coeffs[k] r^{2k} h for the geodesic compactification of
// hyperbolic space with round conformal infinity
struct CompactificationExpansion {
  int n;
  std::vector<Rational> h_coeffs;
  Rational h2() const { return h_coeffs.at(1); }
  Rational tr_h4() const { return n * h_coeffs.at(2); }
  Rational at(const Rational& r) const;
};

CompactificationExpansion hyperbolic_expansion(int n);

struct GeodesicInvariants {
  Rational H, P_eta_eta, J, Jbar, eta_J, delta_J, eta_delta_J, Pbar_sq;
};

GeodesicInvariants geodesic_invariants(int n);

}  // namespace gjms6
