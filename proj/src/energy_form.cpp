#include "gjms6/energy_form.hpp"

#include <cmath>
#include <stdexcept>

#include "gjms6/boundary_ops.hpp"
#include "gjms6/gjms6.hpp"
#include "gjms6/quadrature.hpp"

namespace gjms6 {

EnergyReport<MomentScalar> q6_form(const ModelGeometry& g, const MultiPoly& u, const MultiPoly& v) {
  if (g.kind != Kind::EuclideanBall) throw std::invalid_argument("q6_form: polynomial fields need the flat ball");
  EnergyReport<MomentScalar> r;
  r.interior = ball_integral(u * apply_L6(g, v), g.n);
  r.boundary = MomentScalar::vol(0);
  for (int j = 0; j <= 2; ++j) {
    MultiPoly bu = apply_B(j, g, u);
    if (bu.is_zero()) continue;
    r.boundary += sphere_integral(bu * apply_B(5 - j, g, v), g.n);
  }
  r.total = r.interior + r.boundary;
  return r;
}

MomentScalar symmetry_residual(const ModelGeometry& g, const MultiPoly& u, const MultiPoly& v) {
  return q6_form(g, u, v).total - q6_form(g, v, u).total;
}

// ---------------------------------------------------------------------------
// half-space modes: e^{-ty} p(y)

namespace {

using Poly1 = std::vector<Rational>;

Poly1 padd(const Poly1& a, const Poly1& b) {
  Poly1 r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}
Poly1 pscale(const Rational& c, Poly1 a) {
  for (auto& x : a) x *= c;
  return a;
}
Poly1 pmul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}
Poly1 pdiff(const Poly1& a) {
  Poly1 r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(Rational(long(i)) * a[i]);
  return r;
}
Rational pat(const Poly1& a, const Rational& x) {
  Rational r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

// y-derivative of e^{-ty} p
Poly1 edy(const Rational& t, const Poly1& p) { return padd(pdiff(p), pscale(-t, p)); }
// mode Laplacian: p'' - 2t p'
Poly1 elap(const Rational& t, const Poly1& p) {
  Poly1 d = pdiff(p);
  return padd(pdiff(d), pscale(-2 * t, d));
}
// int_0^inf e^{-2ty} p(y) dy
Rational eint(const Rational& t, const Poly1& p) {
  Rational s = 0, f = 1, tt = 2 * t, pw = tt;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) f *= long(k);
    s += p[k] * f / pw;
    pw *= tt;
  }
  return s;
}

Rational exp_mode_B(int j, int n, const ExpMode& u) {
  const int K = int(u.p.size()) + 12;
  WarpedGeometry w = warped_model(ModelGeometry(Kind::UpperHalfSpace, n), K);
  Series<Rational> e(K);
  Rational c = 1;
  for (int k = 0; k <= K; ++k) {
    e.c[k] = c;
    c = c * (-u.t) / (k + 1);
  }
  return apply_B_mode<Rational>(j, w, u.t * u.t, e * series_poly(K, u.p));
}

void check_pair(const ExpMode& u, const ExpMode& v) {
  if (u.t <= 0 || u.t != v.t) throw std::invalid_argument("half-space modes need one common frequency t > 0");
}

}  // namespace

EnergyReport<Rational> q6_form(int n, const ExpMode& u, const ExpMode& v) {
  check_pair(u, v);
  Poly1 l6v = v.p;
  for (int k = 0; k < 3; ++k) l6v = pscale(-1, elap(v.t, l6v));
  EnergyReport<Rational> r;
  r.interior = eint(u.t, pmul(u.p, l6v));
  for (int j = 0; j <= 2; ++j) r.boundary += exp_mode_B(j, n, u) * exp_mode_B(5 - j, n, v);
  r.total = r.interior + r.boundary;
  return r;
}

BilinearDecomposition fi_fb_decompose(const ModelGeometry& g, const ExpMode& u, const ExpMode& v) {
  if (g.kind != Kind::UpperHalfSpace)
    throw std::invalid_argument("fi_fb_decompose: the split holds for normal-form metrics; only the half-space qualifies");
  check_pair(u, v);
  const Rational& t = u.t;
  Rational t2 = t * t;
  Poly1 lu = elap(t, u.p), lv = elap(t, v.p);
  BilinearDecomposition d;
  d.FI = eint(t, padd(pmul(edy(t, lu), edy(t, lv)), pscale(t2, pmul(lu, lv))));
  // boundary values: eta = -d/dy, Lapbar -> -t^2
  Rational etaU = -pat(edy(t, u.p), 0), etaV = -pat(edy(t, v.p), 0);
  Rational U0 = pat(u.p, 0), V0 = pat(v.p, 0), LU0 = pat(lu, 0), LV0 = pat(lv, 0);
  d.FB = -4 * (LU0 * (-t2 * etaV) + LV0 * (-t2 * etaU)) + 8 * (etaU * t2 * t2 * V0 + etaV * t2 * t2 * U0);
  return d;
}

Rational multiplier_energy(Boundary b, int n, const ModeIndex& m, const Triple& d) {
  std::array<Rational, 3> c = dtn_constants(b, n, m);
  return c[0] * d.f * d.f + c[1] * d.phi * d.phi + c[2] * d.psi * d.psi;
}

// ---------------------------------------------------------------------------
// ball modes

namespace {

// Lap(R Y_l) = R2 Y_l; r^p -> (p - l)(p + l + n - 1) r^{p-2}
Poly1 radial_lap(int n, int ell, const Poly1& c) {
  Poly1 r(c.size() >= 2 ? c.size() - 2 : 0, Rational(0));
  for (std::size_t p = 2; p < c.size(); ++p) r[p - 2] += Rational(long(p) - ell) * (long(p) + ell + n - 1) * c[p];
  for (std::size_t p = 0; p < std::min<std::size_t>(2, c.size()); ++p)
    if (c[p] != 0 && long(p) != ell) throw std::invalid_argument("radial profile is not smooth at the origin");
  return r;
}

// int_0^1 P(r) r^n dr
Rational rint(int n, const Poly1& P) {
  Rational s = 0;
  for (std::size_t k = 0; k < P.size(); ++k) s += P[k] / (long(k) + n + 1);
  return s;
}

// int (a'b' + lambda ab/r^2) r^n dr
Rational grad_pair(int n, int ell, const Poly1& a, const Poly1& b) {
  Rational lam = Rational(ell) * (ell + n - 1);
  Rational s = rint(n, pmul(pdiff(a), pdiff(b)));
  if (lam != 0) {
    Poly1 ab = pmul(a, b);
    if (ab.size() >= 1 && ab[0] != 0) throw std::invalid_argument("grad_pair: singular at the origin");
    if (ab.size() >= 2 && ab[1] != 0) throw std::invalid_argument("grad_pair: singular at the origin");
    Poly1 sh(ab.size() > 2 ? ab.begin() + 2 : ab.end(), ab.end());
    s += lam * rint(n, sh);
  }
  return s;
}

Rational grad_lap_pair(int n, int ell, const Poly1& a, const Poly1& b) {
  return grad_pair(n, ell, radial_lap(n, ell, a), radial_lap(n, ell, b));
}

Poly1 ball_profile(int n, int ell, const Triple& d) {
  ExactSolveResult s = ball_mode_solve(n, ell, d);
  Poly1 R(ell + 5, Rational(0));
  for (int k = 0; k < 3; ++k) R[ell + 2 * k] = s.coeffs[k];
  return R;
}

}  // namespace

Rational ball_grad_lap_sq(int n, const RadialMode& u) { return grad_lap_pair(n, u.ell, u.c, u.c); }
Rational ball_l2_sq(int n, const RadialMode& u) { return rint(n, pmul(u.c, u.c)); }

Rational ball_display_energy(int n, int ell, const Triple& d) {
  Poly1 R = ball_profile(n, ell, d);
  Rational N = n, lam = Rational(ell) * (ell + n - 1);
  // boundary data by the display's own definitions
  Rational f = pat(R, 1);
  Rational phi = pat(pdiff(R), 1) + (N - 5) / 2 * f;
  Rational psi = pat(pdiff(pdiff(R)), 1) + (N - 4) * phi + lam / 3 * f - (N - 5) * (N - 6) / 6 * f;
  Rational bd = (N - 9) / 2 * psi * psi + 8 * lam * psi * phi + 2 * (N * N - 9) * psi * phi -
                4 * (N - 3) / 3 * lam * psi * f - (N - 3) * (N - 5) * (N + 3) / 3 * f * psi + 8 * (N - 3) * phi * phi +
                rat(16, 3) * lam * lam * phi * f + 8 * (N * N - 4 * N - 3) / 3 * lam * phi * f +
                (N - 5) * (N - 3) * (N - 3) * (N + 3) / 3 * phi * f + 8 * (N + 3) / 9 * lam * lam * f * f +
                4 * (N * N * N + N * N - 21 * N - 9) / 9 * lam * f * f +
                (N - 5) * (N - 3) * (N + 3) * (N * N + 4 * N - 9) / 18 * f * f;
  return grad_lap_pair(n, ell, R, R) + bd;
}

double hemisphere_display_energy(int n, int ell, const BoundaryTriple<double>& d, const CollocationConfig& cfg) {
  HemisphereSolveResult h = hemisphere_mode_solve(n, ell, d, cfg);
  std::array<Rational, 3> cs = hemisphere_factor_constants(n);
  double lam = double(ell) * (ell + n - 1), N = n;
  // boundary data from the display definitions; u_k has w_k(0) = 1
  double f = 0, phi = 0, lapu = 0;
  for (int k = 0; k < 3; ++k) {
    f += h.coeffs[k];
    phi -= h.coeffs[k] * h.factors[k].dw(0);
    lapu += h.coeffs[k] * cs[k].get_d() * h.factors[k].w(0);
  }
  double psi = lapu + 4.0 / 3.0 * lam * f + (N - 3) * (N - 5) / 12 * f;
  double bd = 8 * lam * psi * phi + (3 * N * N - 8 * N + 13) / 2 * psi * phi + 16.0 / 3.0 * lam * lam * f * phi +
              2 * (5 * N * N - 8 * N - 37) / 3 * lam * f * phi +
              (N - 3) * (N - 5) * (3 * N * N + 4 * N - 11) / 12 * f * phi;
  double c2 = (3 * N * N - 35) / 4, c1 = (3 * N * N * N * N - 70 * N * N + 259) / 16;
  double c0 = rising(Rational(n - 5, 2), 6).get_d();
  // Lap u = sum_k c_k a_k u_k, so only first derivatives are needed
  QuadRule q = gauss_legendre(200, 0, M_PI / 2);
  double interior = 0;
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    double s = q.x[i], cs_ = std::cos(s), sn = std::sin(s);
    double R = 0, Rs = 0, G = 0, Gs = 0;
    for (int k = 0; k < 3; ++k) {
      double w = h.factors[k].w_at(sn), dw = h.factors[k].dw_at(sn);
      double Rk = std::pow(cs_, ell) * w;
      double Rks = (ell ? -ell * std::pow(cs_, ell - 1) * sn * w : 0.0) + std::pow(cs_, ell + 1) * dw;
      R += h.coeffs[k] * Rk;
      Rs += h.coeffs[k] * Rks;
      G += h.coeffs[k] * cs[k].get_d() * Rk;
      Gs += h.coeffs[k] * cs[k].get_d() * Rks;
    }
    double inv2 = 1 / (cs_ * cs_);
    double dens = Gs * Gs + lam * G * G * inv2 + c2 * G * G + c1 * (Rs * Rs + lam * R * R * inv2) + c0 * R * R;
    interior += q.w[i] * dens * std::pow(cs_, n);
  }
  return interior + bd;
}

// ---------------------------------------------------------------------------

namespace {

// exact LDL^T of a symmetric positive matrix; returns false on a
// non-positive pivot
bool ldlt(const std::vector<std::vector<Rational>>& A, std::vector<std::vector<Rational>>& L, std::vector<Rational>& D) {
  int N = int(A.size());
  L.assign(N, std::vector<Rational>(N, Rational(0)));
  D.assign(N, Rational(0));
  for (int j = 0; j < N; ++j) {
    Rational s = A[j][j];
    for (int k = 0; k < j; ++k) s -= L[j][k] * L[j][k] * D[k];
    D[j] = s;
    if (s <= 0) return false;
    L[j][j] = 1;
    for (int i = j + 1; i < N; ++i) {
      Rational t = A[i][j];
      for (int k = 0; k < j; ++k) t -= L[i][k] * L[j][k] * D[k];
      L[i][j] = t / D[j];
    }
  }
  return true;
}

}  // namespace

DirichletEigenEstimate dirichlet_eigen_lower(const ModelGeometry& g, const std::vector<int>& ells, int N) {
  if (g.kind != Kind::EuclideanBall) throw std::invalid_argument("dirichlet_eigen_lower: flat ball only");
  if (N < 1) throw std::invalid_argument("dirichlet_eigen_lower: N >= 1");
  int n = g.n;
  DirichletEigenEstimate est;
  est.lambda_lower = INFINITY;
  Poly1 cube = {1, 0, -3, 0, 3, 0, -1};  // (1 - r^2)^3
  for (int ell : ells) {
    std::vector<Poly1> basis;
    for (int k = 0; k < N; ++k) {
      Poly1 m(ell + 2 * k + 1, Rational(0));
      m.back() = 1;
      basis.push_back(pmul(cube, m));
    }
    std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N)), B = A;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j <= i; ++j) {
        A[i][j] = A[j][i] = grad_lap_pair(n, ell, basis[i], basis[j]);
        B[i][j] = B[j][i] = rint(n, pmul(basis[i], basis[j]));
      }
    std::vector<std::vector<Rational>> L, LA;
    std::vector<Rational> D, DA;
    if (!ldlt(B, L, D)) throw std::logic_error("dirichlet_eigen_lower: L2 Gram matrix not positive");
    if (!ldlt(A, LA, DA)) est.definite = false;
    // C = L^{-1} A L^{-T}, exact, then D^{-1/2} C D^{-1/2}
    std::vector<std::vector<Rational>> X = A;  // L^{-1} A
    for (int c = 0; c < N; ++c)
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < i; ++k) X[i][c] -= L[i][k] * X[k][c];
    std::vector<std::vector<Rational>> C = X;  // X L^{-T}
    for (int r = 0; r < N; ++r)
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < j; ++k) C[r][j] -= C[r][k] * L[j][k];
    Eigen::MatrixXd S(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) S(i, j) = C[i][j].get_d() / std::sqrt(D[i].get_d() * D[j].get_d());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()));
    double lo = es.eigenvalues()(0);
    est.per_mode.push_back(lo);
    est.modes_checked.push_back(ell);
    est.lambda_lower = std::min(est.lambda_lower, lo);
  }
  return est;
}

LowerBoundResult trace_lower_bound_check(int n, int ell, const MultiPoly& Y, const Triple& data,
                                         const std::vector<MultiPoly>& q) {
  ModelGeometry g(Kind::EuclideanBall, n);
  int d = n + 1;
  if (!laplacian(Y, d).is_zero()) throw std::invalid_argument("trace_lower_bound_check: Y must be harmonic");
  ExactSolveResult s = ball_mode_solve(n, ell, data);
  MultiPoly r2 = radius_sq(d);
  MultiPoly u0 = Y * (MultiPoly::constant(s.coeffs[0]) + s.coeffs[1] * r2 + s.coeffs[2] * (r2 * r2));
  MultiPoly one_m = MultiPoly::constant(1) - r2;
  MultiPoly cube = one_m * one_m * one_m;

  LowerBoundResult out;
  out.report.name = "energy-lower-bound:ball";
  out.energy = q6_form(g, u0, u0).total.q;
  out.predicted = multiplier_energy(Boundary::Round, n, ModeIndex::harmonic(ell), data) * sphere_integral(Y * Y, n).q;
  bool ok = out.energy == out.predicted;
  double worst = std::abs(Rational(out.energy - out.predicted).get_d());
  for (auto& qi : q) {
    MultiPoly v = cube * qi;
    Rational gap = q6_form(g, u0 + v, u0 + v).total.q - out.energy;
    out.gaps.push_back(gap);
    if (gap < Rational(-1, 10000000000L)) ok = false;
    if (v.is_zero() ? gap != 0 : gap <= 0) ok = false;
    if (gap < 0) worst = std::max(worst, -gap.get_d());
  }
  out.report.pass = ok;
  out.report.residual = worst;
  out.report.detail = "exact, units of Vol(S^n)";
  return out;
}

}  // namespace gjms6
