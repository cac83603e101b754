#include "gjms6/model_geometry.hpp"

#include <stdexcept>

namespace gjms6 {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::UpperHalfSpace: return "halfspace";
    case Kind::EuclideanBall: return "ball";
    case Kind::RoundHemisphere: return "hemisphere";
    case Kind::HyperbolicGeodesic: return "hyperbolic";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "halfspace" || s == "upper") return Kind::UpperHalfSpace;
  if (s == "ball") return Kind::EuclideanBall;
  if (s == "hemisphere") return Kind::RoundHemisphere;
  if (s == "hyperbolic") return Kind::HyperbolicGeodesic;
  throw std::invalid_argument("unknown geometry '" + s + "'");
}

ModelGeometry::ModelGeometry(Kind k, int dim) : kind(k), n(dim) {
  if (dim < 5) throw std::invalid_argument("model geometry needs n >= 5");
  if (dim + 1 > 16) throw std::invalid_argument("model geometry: n too large");
}

BoundaryGeometryData boundary_data(const ModelGeometry& g) {
  BoundaryGeometryData d;
  Rational n = g.n;
  d.fialkow_zero = true;
  switch (g.kind) {
    case Kind::UpperHalfSpace:
      break;
    case Kind::EuclideanBall:
      d.H = n;
      d.Pbar_coeff = rat(1, 2);
      d.Jbar = n / 2;
      break;
    case Kind::RoundHemisphere:
      // round S^{n+1}: P = g/2 everywhere
      d.Pbar_coeff = rat(1, 2);
      d.Jbar = n / 2;
      d.P_eta_eta = rat(1, 2);
      d.J = (n + 1) / 2;
      break;
    case Kind::HyperbolicGeodesic: {
      GeodesicInvariants gi = geodesic_invariants(g.n);
      d.Pbar_coeff = rat(1, 2);
      d.Jbar = gi.Jbar;
      d.J = gi.J;
      d.delta_J = gi.delta_J;
      break;
    }
  }
  d.Pbar_sq = n * d.Pbar_coeff * d.Pbar_coeff;
  return d;
}

bool coronal_check(const BoundaryGeometryData& d, const std::vector<Rational>& weyl_eta,
                   const std::vector<Rational>& cotton_eta, int n) {
  std::size_t want = std::size_t(n) * std::size_t(n);
  if (weyl_eta.size() != want || cotton_eta.size() != want)
    throw std::invalid_argument("coronal_check: slice size does not match n x n");
  if (d.A0_norm_sq != 0) return false;
  for (auto& w : weyl_eta)
    if (w != 0) return false;
  for (auto& c : cotton_eta)
    if (c != 0) return false;
  return true;
}

Rational CompactificationExpansion::at(const Rational& r) const {
  Rational s = 0, p = 1;
  for (auto& c : h_coeffs) {
    s += c * p;
    p *= r * r;
  }
  return s;
}

CompactificationExpansion hyperbolic_expansion(int n) {
  if (n < 5) throw std::invalid_argument("hyperbolic_expansion: n >= 5");
  // (1 - r^2/4)^2 = 1 - r^2/2 + r^4/16, exact
  return CompactificationExpansion{n, {Rational(1), rat(-1, 2), rat(1, 16)}};
}

GeodesicInvariants geodesic_invariants(int n) {
  if (n < 5) throw std::invalid_argument("geodesic_invariants: n >= 5");
  GeodesicInvariants g;
  Rational N = n;
  g.Jbar = N / 2;
  g.J = g.Jbar;
  g.Pbar_sq = N / 4;
  // Delta J = Delta-bar J-bar + |Pbar|^2 with J-bar constant
  g.delta_J = g.Pbar_sq;
  return g;
}

}  // namespace gjms6
