#include "gjms6/warped.hpp"

namespace gjms6 {

void WarpedGeometry::finish() {
  Rational N = n;
  Series<Rational> r1 = rho.d(), r2 = r1.d();
  Series<Rational> inv = rho.inverse();
  rho_m2 = inv * inv;
  mean = N * (r1 * inv);
  // Ric(d_s, d_s) = -n rho''/rho, tangential Ric = -rho''/rho + (n-1)(kappa - rho'^2)/rho^2
  Series<Rational> ric_ss = -N * (r2 * inv);
  Series<Rational> kap(K);
  kap.c[0] = kappa;
  Series<Rational> ric_t = -(r2 * inv) + (N - 1) * ((kap - r1 * r1) * rho_m2);
  Series<Rational> R = ric_ss + N * ric_t;
  J = (1 / (2 * N)) * R;
  PN = (1 / (N - 1)) * (ric_ss - J);
  PT = (1 / (N - 1)) * (ric_t - J);
  Psq = PN * PN + N * (PT * PT);
}

WarpedGeometry warped_from_rho(int n, const Rational& kappa, const Series<Rational>& rho) {
  WarpedGeometry w;
  w.n = n;
  w.kappa = kappa;
  w.K = rho.order();
  w.rho = rho;
  w.finish();
  return w;
}

WarpedGeometry warped_model(const ModelGeometry& g, int K) {
  switch (g.kind) {
    case Kind::UpperHalfSpace: return warped_from_rho(g.n, 0, series_poly(K, {1}));
    case Kind::EuclideanBall: return warped_from_rho(g.n, 1, series_poly(K, {1, -1}));
    case Kind::RoundHemisphere: return warped_from_rho(g.n, 1, series_cos(K));
    case Kind::HyperbolicGeodesic: return warped_from_rho(g.n, 1, series_poly(K, {1, 0, rat(-1, 4)}));
  }
  throw std::logic_error("warped_model: unknown kind");
}

namespace {

// normal-form defects for rho = 1 + a2 s^2 + ... ; each is affine in the
// coefficient it is solved for
Rational nf_defect(int which, int n, const std::vector<Rational>& a, int K) {
  WarpedGeometry w = warped_from_rho(n, 1, series_poly(K, a));
  Rational N = n;
  Rational Jbar = w.Jbar();
  switch (which) {
    case 0: return w.PN.at0() - Jbar / 3;
    case 1: return w.J.deriv_at0(1);
    case 2: {
      // Lap J at the boundary, J radial
      Series<Rational> j1 = w.J.d();
      Series<Rational> lj = j1.d() + w.mean * j1;
      return lj.at0() - (4 * w.PbarSq() - 4 * N / 9 * Jbar * Jbar);
    }
    case 3: {
      Series<Rational> j1 = w.J.d();
      Series<Rational> lj = j1.d() + w.mean * j1;
      // eta Lap J = -4 eta |P|^2
      return -lj.deriv_at0(1) - 4 * w.Psq.deriv_at0(1);
    }
  }
  return 0;
}

}  // namespace

WarpedGeometry normal_form_warped(int n, int K) {
  std::vector<Rational> a = {1, 0, 0, 0, 0, 0};
  for (int which = 0; which < 4; ++which) {
    int idx = which + 2;
    a[idx] = 0;
    Rational d0 = nf_defect(which, n, a, K);
    a[idx] = 1;
    Rational d1 = nf_defect(which, n, a, K);
    if (d1 == d0) throw std::logic_error("normal_form_warped: condition does not involve its coefficient");
    a[idx] = -d0 / (d1 - d0);
  }
  return warped_from_rho(n, 1, series_poly(K, a));
}

}  // namespace gjms6
