#pragma once

#include <array>
#include <vector>

#include "gjms6/exact_poly.hpp"
#include "gjms6/model_geometry.hpp"
#include "gjms6/poly.hpp"

namespace gjms6 {

enum class L6Form { FlatTriharmonic, EinsteinFactorized, GeodesicInterior };

struct L6Realization {
  ModelGeometry geom;
  L6Form form;
};

L6Realization l6_realization(const ModelGeometry& g);

// constants c_k with L6 = prod_k (-Lap + c_k) on the round hemisphere S^{n+1}_+
std::array<Rational, 3> hemisphere_factor_constants(int n);

// (-Lap)^3 in the n+1 interior variables; flat models only
MultiPoly apply_L6(const ModelGeometry& g, const MultiPoly& u);
// half-space mode e^{-ty} p
ExpPolyMode apply_L6(const ModelGeometry& g, const ExpPolyMode& u);
// L6 of a constant c on the hemisphere
Rational apply_L6_constant(const ModelGeometry& g, const Rational& c);
// eigenvalue of L6 on a degree-ell spherical harmonic of S^{n+1}
Rational hemisphere_L6_eigenvalue(int n, int ell);

// Q6 of the unit round S^d, d = n+1 >= 6
Rational q6_constant_curvature(int d);

// T4 = tau g on the unit round S^{n+1}
Rational t4_round_scalar(int n);
// general display of L6 specialised to the unit round S^{n+1}, acting on a
// -Lap eigenfunction with eigenvalue mu
Rational l6_round_display(int n, const Rational& mu);

// T4(du, .) for constant-coefficient one-forms; flat models give 0 and the
// hemisphere gives tau du
std::vector<Rational> t4_action(const ModelGeometry& g, const std::vector<Rational>& du);

// T4(eta, eta) along a boundary in normal form
Rational t4_eta_eta_normal_form(int n, const Rational& lapbar_Jbar, const Rational& Pbar_sq, const Rational& Jbar);

}  // namespace gjms6
