#include "gjms6/gjms6.hpp"

#include <stdexcept>

namespace gjms6 {

L6Realization l6_realization(const ModelGeometry& g) {
  switch (g.kind) {
    case Kind::UpperHalfSpace:
    case Kind::EuclideanBall: return {g, L6Form::FlatTriharmonic};
    case Kind::RoundHemisphere: return {g, L6Form::EinsteinFactorized};
    case Kind::HyperbolicGeodesic: return {g, L6Form::GeodesicInterior};
  }
  throw std::logic_error("l6_realization: unknown kind");
}

std::array<Rational, 3> hemisphere_factor_constants(int n) {
  Rational N = n;
  return {(N + 1) * (N - 1) / 4, (N + 3) * (N - 3) / 4, (N + 5) * (N - 5) / 4};
}

MultiPoly apply_L6(const ModelGeometry& g, const MultiPoly& u) {
  if (!g.flat_interior()) throw std::invalid_argument("apply_L6: polynomial fields need a flat model");
  int d = g.n + 1;
  return -laplacian(laplacian(laplacian(u, d), d), d);
}

ExpPolyMode apply_L6(const ModelGeometry& g, const ExpPolyMode& u) {
  if (g.kind != Kind::UpperHalfSpace) throw std::invalid_argument("apply_L6: exponential modes live on the half-space");
  ExpPolyMode m = u;
  for (int i = 0; i < 3; ++i) m = mode_apply(ModeOp::Lap, m);
  m.profile = -m.profile;
  return m;
}

Rational apply_L6_constant(const ModelGeometry& g, const Rational& c) {
  if (g.flat_interior()) return 0;
  if (g.kind != Kind::RoundHemisphere) throw std::invalid_argument("apply_L6: constants supported on flat models and the hemisphere");
  auto k = hemisphere_factor_constants(g.n);
  return k[0] * k[1] * k[2] * c;
}

Rational hemisphere_L6_eigenvalue(int n, int ell) {
  Rational mu = Rational(ell) * (ell + n);
  auto k = hemisphere_factor_constants(n);
  return (mu + k[0]) * (mu + k[1]) * (mu + k[2]);
}

Rational q6_constant_curvature(int d) {
  if (d < 6) throw std::invalid_argument("q6_constant_curvature: need d >= 6");
  Rational n = d - 1;
  Rational J = rat(d, 2), Psq = rat(d, 4), trP3 = rat(d, 8);
  return (n - 1) * (n + 3) / 4 * J * J * J - 4 * (n + 1) * J * Psq + 16 * trP3;
}

Rational t4_round_scalar(int n) {
  Rational N = n, d = n + 1;
  Rational J = d / 2, Psq = d / 4;
  // P = g/2, P^2 = g/4, Bach = 0, Lap J = 0
  return (3 * N * N - 6 * N - 13) / 4 * J * J - 4 * (N - 3) * Psq - 8 * (N - 1) * J * rat(1, 2) + 48 * rat(1, 4);
}

Rational l6_round_display(int n, const Rational& mu) {
  // Lap -> -mu, delta(c g)d -> c Lap
  Rational N = n, J = rat(n + 1, 2);
  Rational c1 = (N - 1) * J - 4;
  Rational tau = t4_round_scalar(n);
  return mu * mu * mu + 2 * c1 * mu * mu - (N - 1) / 2 * J * mu * mu + tau * mu + (N - 5) / 2 * q6_constant_curvature(n + 1);
}

std::vector<Rational> t4_action(const ModelGeometry& g, const std::vector<Rational>& du) {
  std::vector<Rational> out(du.size());
  if (g.flat_interior()) return out;
  if (g.kind != Kind::RoundHemisphere) throw std::invalid_argument("t4_action: no closed form for this model");
  Rational tau = t4_round_scalar(g.n);
  for (std::size_t i = 0; i < du.size(); ++i) out[i] = tau * du[i];
  return out;
}

Rational t4_eta_eta_normal_form(int n, const Rational& lapbar_Jbar, const Rational& Pbar_sq, const Rational& Jbar) {
  Rational N = n;
  return -8 * (N - 5) / 3 * lapbar_Jbar - 8 * (N - 4) * Pbar_sq + 8 * (2 * N * N - 10 * N + 5) / 9 * Jbar * Jbar;
}

}  // namespace gjms6
