#include "gjms6/fractional.hpp"

#include <cmath>
#include <stdexcept>

#include "gjms6/boundary_ops.hpp"

namespace gjms6 {

namespace {

int two_gamma(const Rational& gamma) {
  Rational g2 = 2 * gamma;
  if (g2.get_den() != 1 || g2 < 1 || g2 > 6) throw std::invalid_argument("multiplier: gamma must be in {1/2, 1, ..., 3}");
  return int(g2.get_num().get_si());
}

}  // namespace

Boundary boundary_of(const ModelGeometry& g) {
  return g.kind == Kind::UpperHalfSpace ? Boundary::Flat : Boundary::Round;
}

namespace {

Rational multiplier_impl(Boundary b, int n, const Rational& gamma, const ModeIndex& m, bool allow_critical) {
  int k = two_gamma(gamma);
  if (k > n || (k == n && !allow_critical)) throw std::domain_error("multiplier: gamma must be below n/2");
  if (b == Boundary::Flat) {
    if (!m.flat) throw std::invalid_argument("multiplier: flat boundary needs a frequency mode");
    if (m.t < 0) throw std::invalid_argument("multiplier: negative frequency");
    return pow(m.t, k);
  }
  if (m.flat) throw std::invalid_argument("multiplier: round boundary needs a harmonic degree");
  return rising(Rational(m.ell) + Rational(n, 2) - gamma, k);
}

}  // namespace

Rational multiplier(Boundary b, int n, const Rational& gamma, const ModeIndex& m) {
  return multiplier_impl(b, n, gamma, m, false);
}

std::array<Rational, 3> dtn_constants(Boundary b, int n, const ModeIndex& m) {
  // at n = 5 the top slot pairs with the critical P5, same closed form
  return {rat(8, 3) * multiplier_impl(b, n, rat(5, 2), m, true), 8 * multiplier(b, n, rat(3, 2), m),
          3 * multiplier(b, n, rat(1, 2), m)};
}

ScatteringExpansion scattering_T2_T4(int n, const Rational& s, Boundary b, const ModeIndex& m) {
  Rational p1 = 2 * s - n - 2, p2 = 2 * s - n - 4;
  if (p1 == 0 || p2 == 0) throw std::domain_error("scattering_T2_T4: pole at 2s = n+2 or 2s = n+4");
  Rational lam = m.lambda(n);
  Rational Jbar = 0, PbarSq = 0;
  if (b == Boundary::Round) {
    Jbar = Rational(n, 2);
    PbarSq = Rational(n, 4);
  }
  // L2(x) = -Lapbar + x Jbar. L4(x): Pbar = (Jbar/n) gbar, so
  // div((2Pbar - Jbar gbar) d) + Jbar Lapbar = (2 Jbar/n) Lapbar
  auto L2 = [&](const Rational& x) -> Rational { return lam + x * Jbar; };
  auto L4 = [&](const Rational& x) -> Rational { return -(2 * Jbar / n) * lam - x * PbarSq; };
  ScatteringExpansion e;
  Rational ns = n - s;
  e.L2 = L2(ns);
  e.L4 = L4(ns);
  e.T2 = -e.L2 / (2 * p1);
  e.T4 = (L2(ns + 2) * e.L2 / p1 + e.L4) / (8 * p2);
  return e;
}

std::vector<Rational> scattering_series(int n, const Rational& s, Boundary b, const ModeIndex& m, int order) {
  int K = order + 4;
  ModelGeometry g(b == Boundary::Round ? Kind::HyperbolicGeodesic : Kind::UpperHalfSpace, n);
  WarpedGeometry w = warped_model(g, K);
  Rational a = n - s, lam = m.lambda(n);
  Series<Rational> r = series_poly(K, {0, 1});
  std::vector<Rational> f(order + 1, Rational(0));
  f[0] = 1;
  for (int k = 1; k <= order; ++k) {
    Rational ind = Rational(k) * (k + n - 2 * s);
    if (ind == 0) throw std::domain_error("scattering_series: indicial root (pole of the expansion)");
    f[k] = 0;
    Series<Rational> F = series_poly(K, f);
    Series<Rational> F1 = F.d(), F2 = F1.d();
    // r^{-a} times the equation applied to r^a F
    Series<Rational> rF1 = r * F1;
    Series<Rational> E = (a * (a - 1) - (n - 1) * a + s * (n - s)) * F + (2 * a - (n - 1)) * rF1 + r * r * F2 +
                         r * (w.mean * (a * F + rF1)) - lam * (r * r * (w.rho_m2 * F));
    f[k] = -E.c[k] / ind;
  }
  return f;
}

DtnResiduals dtn_residuals(const ModelGeometry& g, const ModeIndex& m, const Triple& data) {
  ExactSolveResult r = solve_mode_exact(exact_mode_basis(g, m), data);
  std::array<Rational, 3> c = dtn_constants(boundary_of(g), g.n, m);
  DtnResiduals out;
  for (int i = 0; i < 3; ++i) {
    // neumann[i] pairs with slot i: B5 with f, B4 with phi, B3 with psi
    out.exact[i] = r.neumann[i] - c[i] * data[i];
    out.numeric[i] = out.exact[i].get_d();
  }
  return out;
}

CheckReport dtn_verify(const ModelGeometry& g, const ModeIndex& m, const Triple& data) {
  CheckReport rep;
  rep.name = "dtn:" + kind_name(g.kind);
  try {
    DtnResiduals d = dtn_residuals(g, m, data);
    rep.pass = true;
    for (int i = 0; i < 3; ++i) {
      rep.residual = std::max(rep.residual, std::abs(d.numeric[i]));
      if (d.exact[i] != 0) rep.pass = false;
    }
    rep.detail = "exact";
  } catch (const std::domain_error& e) {
    rep.pass = false;
    rep.detail = e.what();
  }
  return rep;
}

CheckReport dtn_verify_collocated(int n, int ell, const BoundaryTriple<double>& data, double tol) {
  CheckReport rep;
  rep.name = "dtn:hemisphere-collocation";
  HemisphereSolveResult r = hemisphere_mode_solve(n, ell, data);
  std::array<Rational, 3> c = dtn_constants(Boundary::Round, n, ModeIndex::harmonic(ell));
  for (int i = 0; i < 3; ++i) {
    double want = c[i].get_d() * data[i];
    double scale = std::max(1.0, std::abs(c[i].get_d()) * (std::abs(data.f) + std::abs(data.phi) + std::abs(data.psi)));
    rep.residual = std::max(rep.residual, std::abs(r.neumann[i] - want) / scale);
  }
  rep.pass = rep.residual <= tol;
  rep.detail = "relative";
  return rep;
}

std::array<MultiPoly, 3> dtn_symbolic_halfspace() {
  ModelGeometry hs(Kind::UpperHalfSpace, 7);
  MultiPoly t = MultiPoly::variable(ExpPolyMode::tvar), y = MultiPoly::variable(ExpPolyMode::yvar);
  MultiPoly a = MultiPoly::variable(2), b = MultiPoly::variable(3), c = MultiPoly::variable(4);
  ExpPolyMode u(a + y * b + y * y * c);
  MultiPoly B[6];
  for (int j = 0; j < 6; ++j) B[j] = apply_B(j, hs, u);
  MultiPoly t2 = t * t, t3 = t2 * t, t5 = t3 * t2;
  return {B[5] - rat(8, 3) * (t5 * B[0]), B[4] - Rational(8) * (t3 * B[1]), B[3] - Rational(3) * (t * B[2])};
}

Mat3 dtn_gram(const ModelGeometry& g, const ModeIndex& m) {
  ExactModeBasis basis = exact_mode_basis(g, m);
  std::array<ExactSolveResult, 3> u;
  for (int a = 0; a < 3; ++a) {
    Triple e{0, 0, 0};
    e[a] = 1;
    u[a] = solve_mode_exact(basis, e);
  }
  Mat3 G;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Rational s = 0;
      for (int j = 0; j < 3; ++j) s += u[a].achieved[j] * u[b].neumann[j];
      G[a][b] = s;
    }
  return G;
}

SelfAdjointReport dtn_selfadjointness(const ModelGeometry& g, int j, const std::vector<ModeIndex>& modes) {
  int slot;
  switch (j) {
    case 5: slot = 0; break;
    case 3: slot = 1; break;
    case 1: slot = 2; break;
    default: throw std::invalid_argument("dtn_selfadjointness: j in {1, 3, 5}");
  }
  SelfAdjointReport out;
  out.report.name = "dtn-selfadjoint:" + kind_name(g.kind) + ":j=" + std::to_string(j);
  Rational worst = 0;
  for (auto& m : modes) {
    Mat3 G = dtn_gram(g, m);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) worst = std::max(worst, Rational(abs(G[a][b] - G[b][a])));
    Rational mult = G[slot][slot];
    Rational want = dtn_constants(boundary_of(g), g.n, m)[slot];
    worst = std::max(worst, Rational(abs(mult - want)));
    out.multipliers.push_back(mult);
  }
  out.report.residual = worst.get_d();
  out.report.pass = worst == 0;
  out.report.detail = "exact; distinct modes pair to zero by orthogonality";
  return out;
}

}  // namespace gjms6
