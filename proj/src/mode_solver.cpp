#include "gjms6/mode_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "gjms6/boundary_ops.hpp"
#include "gjms6/gjms6.hpp"
#include "gjms6/quadrature.hpp"

namespace gjms6 {

std::array<Rational, 3> triple_weights(int n) {
  return {rat(n - 5, 2), rat(n - 3, 2), rat(n - 1, 2)};
}

namespace {

Series<Rational> series_exp(int K, const Rational& a) {
  Series<Rational> e(K);
  Rational c = 1;
  for (int k = 0; k <= K; ++k) {
    e.c[k] = c;
    c = c * a / (k + 1);
  }
  return e;
}

Series<Rational> power_of(const Series<Rational>& x, const Rational& a) {
  Series<Rational> g = x;
  g.c[0] -= 1;
  if (x.c[0] != 1) throw std::logic_error("power_of: series must start at 1");
  return series_binomial(g, a);
}

// radius of the flat ball as a function of s, and the conformal weight
// factor e^{-(n-5) omega / 2} relating the model metric to the flat ball
struct BallChart {
  Series<Rational> r, weight;
};

BallChart ball_chart(const ModelGeometry& g, int K) {
  Rational w = -Rational(g.n - 5) / 2;
  BallChart c;
  switch (g.kind) {
    case Kind::EuclideanBall:
      c.r = series_poly(K, {1, -1});
      c.weight = series_poly(K, {1});
      break;
    case Kind::RoundHemisphere: {
      // r = tan(pi/4 - s/2) = (1 - tau)/(1 + tau), e^omega = 1 + sin s
      Series<Rational> tau = series_sin(K).compose(series_poly(K, {0, rat(1, 2)})) *
                             series_cos(K).compose(series_poly(K, {0, rat(1, 2)})).inverse();
      c.r = (series_poly(K, {1}) - tau) * (series_poly(K, {1}) + tau).inverse();
      c.weight = power_of(series_poly(K, {1}) + series_sin(K), w);
      break;
    }
    case Kind::HyperbolicGeodesic:
      // r = (2 - s)/(2 + s), e^omega = (1 + s/2)^2
      c.r = series_poly(K, {2, -1}) * series_poly(K, {2, 1}).inverse();
      c.weight = power_of(series_poly(K, {1, rat(1, 2)}), 2 * w);
      break;
    case Kind::UpperHalfSpace:
      throw std::logic_error("ball_chart: half-space has no ball chart");
  }
  return c;
}

Rational det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<Rational, 3> solve3(Mat3 m, std::array<Rational, 3> b) {
  for (int c = 0; c < 3; ++c) {
    int p = c;
    while (p < 3 && m[p][c] == 0) ++p;
    if (p == 3) throw std::domain_error("degenerate mode: singular Dirichlet system");
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (int r = 0; r < 3; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < 3; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  return {b[0] / m[0][0], b[1] / m[1][1], b[2] / m[2][2]};
}

}  // namespace

ExactModeBasis exact_mode_basis(const ModelGeometry& g, const ModeIndex& m, int K) {
  ExactModeBasis b{g, m, warped_model(g, K), m.lambda(g.n), {}};
  if (g.kind == Kind::UpperHalfSpace) {
    if (!m.flat) throw std::invalid_argument("exact_mode_basis: half-space modes are flat frequencies");
    // t = 0 has no decaying solutions; reported as a degenerate mode
    if (m.t <= 0) throw std::domain_error("degenerate mode: half-space frequency must be positive");
    Series<Rational> e = series_exp(K, -m.t), sk = series_poly(K, {1});
    for (int k = 0; k < 3; ++k) {
      b.basis[k] = e * sk;
      sk = sk * series_poly(K, {0, 1});
    }
    return b;
  }
  if (m.flat) throw std::invalid_argument("exact_mode_basis: round boundary needs a harmonic degree");
  if (m.ell < 0) throw std::invalid_argument("exact_mode_basis: ell >= 0");
  BallChart c = ball_chart(g, K);
  for (int k = 0; k < 3; ++k) b.basis[k] = c.weight * power_of(c.r, m.ell + 2 * k);
  return b;
}

Mat3 boundary_matrix(const ExactModeBasis& b, int j0) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m[i][k] = apply_B_mode<Rational>(j0 + i, b.w, b.lambda, b.basis[k]);
  return m;
}

ExactSolveResult solve_mode_exact(const ExactModeBasis& b, const Triple& data) {
  Mat3 D = boundary_matrix(b, 0);
  ExactSolveResult r;
  r.coeffs = solve3(D, {data.f, data.phi, data.psi});
  r.profile = b.basis[0] * r.coeffs[0] + b.basis[1] * r.coeffs[1] + b.basis[2] * r.coeffs[2];
  Mat3 N = boundary_matrix(b, 3);
  for (int i = 0; i < 3; ++i) {
    Rational a = 0, nn = 0;
    for (int k = 0; k < 3; ++k) {
      a += D[i][k] * r.coeffs[k];
      nn += N[2 - i][k] * r.coeffs[k];
    }
    r.achieved[i] = a;
    r.neumann[i] = nn;
  }
  return r;
}

ExactSolveResult ball_mode_solve(int n, int ell, const Triple& data) {
  if (ell < 0) throw std::invalid_argument("ball_mode_solve: ell >= 0");
  return solve_mode_exact(exact_mode_basis(ModelGeometry(Kind::EuclideanBall, n), ModeIndex::harmonic(ell)), data);
}

ExactSolveResult halfspace_solve(const Rational& t, const Triple& data, int n) {
  if (t <= 0) throw std::domain_error("degenerate mode: half-space frequency must be positive");
  return solve_mode_exact(exact_mode_basis(ModelGeometry(Kind::UpperHalfSpace, n), ModeIndex::frequency(t)), data);
}

HalfspaceSymbolic halfspace_solve(const BoundaryTriple<MultiPoly>& data) {
  MultiPoly t = MultiPoly::variable(ExpPolyMode::tvar);
  MultiPoly y = MultiPoly::variable(ExpPolyMode::yvar);
  for (int i = 0; i < 3; ++i)
    if (data[i].degree(ExpPolyMode::yvar) > 0) throw std::invalid_argument("halfspace_solve: data may not involve y");
  HalfspaceSymbolic h;
  h.a = data.f;
  h.b = t * data.f - data.phi;
  h.c = rat(1, 2) * (data.psi - rat(4, 3) * (t * t * h.a) + Rational(2) * (t * h.b));
  h.mode = ExpPolyMode(h.a + y * h.b + y * y * h.c);
  return h;
}

bool kernel_check(const ModelGeometry& g, const ModeIndex& m) {
  if (g.kind == Kind::UpperHalfSpace && (!m.flat || m.t <= 0)) return false;
  try {
    return det3(boundary_matrix(exact_mode_basis(g, m), 0)) != 0;
  } catch (const std::domain_error&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// hemisphere collocation

namespace {

using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VecL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// extended precision throughout: the boundary derivative feeds fifth-order
// boundary operators and loses about cond * eps in double
struct ChebGrid {
  std::vector<long double> z;
  MatL D;  // d/dz
};

ChebGrid cheb_grid(int N) {
  ChebGrid g;
  const long double pi = 3.141592653589793238462643383279502884L;
  VecL x(N + 1), c(N + 1);
  for (int j = 0; j <= N; ++j) {
    x(j) = std::cos(pi * j / N);
    c(j) = ((j == 0 || j == N) ? 2.0L : 1.0L) * ((j % 2) ? -1.0L : 1.0L);
  }
  MatL D = MatL::Zero(N + 1, N + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j)
      if (i != j) D(i, j) = c(i) / c(j) / (x(i) - x(j));
  for (int i = 0; i <= N; ++i) D(i, i) = -D.row(i).sum();
  // z = (1 - x)/2
  g.D = -2.0L * D;
  for (int j = 0; j <= N; ++j) g.z.push_back((1 - x(j)) / 2);
  return g;
}

MatL factor_matrix(const ChebGrid& g, int n, int ell, long double c) {
  int M = int(g.z.size());
  MatL D2 = g.D * g.D;
  MatL A(M, M);
  long double a = n + 1 + 2 * ell, b = (long double)(ell) * (ell + n) + c;
  for (int i = 0; i < M; ++i) {
    long double z = g.z[i];
    A.row(i) = (1 - z * z) * D2.row(i) - a * z * g.D.row(i);
    A(i, i) -= b;
  }
  return A;
}

// Taylor coefficients of w at z = 0 from w(0), w'(0) and the factor ODE
Series<long double> taylor_from_ode(int n, int ell, long double c, long double w0, long double w1, int K) {
  Series<long double> s(K);
  s.c[0] = w0;
  if (K >= 1) s.c[1] = w1;
  long double a = n + 1 + 2 * ell, b = (long double)(ell) * (ell + n) + c;
  for (int k = 0; k + 2 <= K; ++k) s.c[k + 2] = (k * (k - 1) + a * k + b) / (long double)((k + 2) * (k + 1)) * s.c[k];
  return s;
}

}  // namespace

namespace {

double barycentric(const std::vector<double>& z, const Eigen::VectorXd& w, double zz) {
  int N = int(z.size()) - 1;
  double num = 0, den = 0;
  for (int j = 0; j <= N; ++j) {
    double d = zz - z[j];
    if (d == 0) return w(j);
    double c = ((j == 0 || j == N) ? 0.5 : 1.0) * ((j % 2) ? -1.0 : 1.0);
    num += c / d * w(j);
    den += c / d;
  }
  return num / den;
}

}  // namespace

double ModeField::w_at(double zz) const { return barycentric(z, w, zz); }
double ModeField::dw_at(double zz) const { return barycentric(z, dw, zz); }

double ModeField::operator()(double theta) const {
  return std::pow(std::sin(theta), ell) * w_at(std::cos(theta));
}

HemisphereSolveResult hemisphere_mode_solve(int n, int ell, const BoundaryTriple<double>& data,
                                            const CollocationConfig& cfg) {
  if (ell < 0) throw std::invalid_argument("hemisphere_mode_solve: ell >= 0");
  if (cfg.N < 8) throw std::invalid_argument("hemisphere_mode_solve: grid too small");
  ModelGeometry g(Kind::RoundHemisphere, n);
  const int K = 16;
  ChebGrid grid = cheb_grid(cfg.N);
  std::vector<double> zd(grid.z.begin(), grid.z.end());
  std::array<Rational, 3> cs = hemisphere_factor_constants(n);
  WarpedGeometry wg = warped_model(g, K);
  long double lambda = (long double)(ell) * (ell + n - 1);

  Series<long double> sn = series_sin(K).cast<long double>();
  Series<long double> cl = series_binomial(series_cos(K) - series_poly(K, {1}), Rational(ell)).cast<long double>();

  HemisphereSolveResult out;
  Eigen::Matrix<long double, 3, 3> D, Nm;
  for (int k = 0; k < 3; ++k) {
    // -Lap u + c u = 0: Lap u = c u
    long double c = cs[k].get_d();
    MatL M = factor_matrix(grid, n, ell, c);
    M.row(0).setZero();
    M(0, 0) = 1;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M.cast<double>());
    double cond = svd.singularValues()(0) / svd.singularValues().tail(1)(0);
    out.cond = std::max(out.cond, cond);
    if (!(cond < cfg.cond_guard)) throw std::runtime_error("hemisphere_mode_solve: collocation matrix ill-conditioned");
    VecL rhs = VecL::Zero(cfg.N + 1);
    rhs(0) = 1;
    VecL w = M.partialPivLu().solve(rhs);
    out.factors[k] = ModeField{n, ell, zd, w.cast<double>(), (grid.D * w).cast<double>()};
    long double w1 = grid.D.row(0).dot(w);
    Series<long double> R = cl * taylor_from_ode(n, ell, c, 1.0L, w1, K).compose(sn);
    for (int j = 0; j < 3; ++j) {
      D(j, k) = apply_B_mode<long double>(j, wg, lambda, R);
      Nm(j, k) = apply_B_mode<long double>(5 - j, wg, lambda, R);
    }
  }
  Eigen::Matrix<long double, 3, 1> rhs(data.f, data.phi, data.psi);
  Eigen::FullPivLU<Eigen::Matrix<long double, 3, 3>> lu(D);
  if (!lu.isInvertible()) throw std::domain_error("degenerate mode: singular Dirichlet system");
  Eigen::Matrix<long double, 3, 1> a = lu.solve(rhs);
  Eigen::Matrix<long double, 3, 1> got = D * a, nn = Nm * a;
  out.profile = ModeField{n, ell, zd, Eigen::VectorXd::Zero(cfg.N + 1), Eigen::VectorXd::Zero(cfg.N + 1)};
  for (int k = 0; k < 3; ++k) {
    out.coeffs[k] = double(a(k));
    out.profile.w += double(a(k)) * out.factors[k].w;
    out.profile.dw += double(a(k)) * out.factors[k].dw;
    out.achieved[k] = got(k);
    out.neumann[k] = nn(k);
  }
  return out;
}

double factorized_weak_residual(const ModeField& u, int ntests) {
  int n = u.n, ell = u.ell;
  std::array<Rational, 3> cs = hemisphere_factor_constants(n);
  Rational a = n + 1 + 2 * ell, base = Rational(ell) * (ell + n);
  QuadRule q = gauss_legendre(160, 0, M_PI / 2);
  // profile values and measure in s, z = sin s
  std::vector<double> wz(q.x.size()), meas(q.x.size());
  double unorm = 0;
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    double s = q.x[i];
    wz[i] = u.w_at(std::sin(s));
    meas[i] = q.w[i] * std::pow(std::cos(s), 2 * ell + n);
    unorm += meas[i] * wz[i] * wz[i];
  }
  unorm = std::sqrt(unorm);
  if (unorm == 0) return 0;
  double worst = 0;
  for (int t = 0; t < ntests; ++t) {
    // test profile z^{6+t}; L6 = prod (c_k - A) in the monomial basis
    int deg = 6 + t;
    std::vector<Rational> h(deg + 1, Rational(0));
    h[deg] = 1;
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> out(h.size(), Rational(0));
      for (int m = 0; m <= deg; ++m) {
        if (h[m] == 0) continue;
        out[m] += (cs[k] + Rational(m) * (m - 1) + a * m + base) * h[m];
        if (m >= 2) out[m - 2] -= Rational(m) * (m - 1) * h[m];
      }
      h = out;
    }
    double ip = 0, tn = 0;
    for (std::size_t i = 0; i < q.x.size(); ++i) {
      double z = std::sin(q.x[i]), v = 0;
      for (int m = deg; m >= 0; --m) v = v * z + h[m].get_d();
      ip += meas[i] * wz[i] * v;
      tn += meas[i] * v * v;
    }
    worst = std::max(worst, std::abs(ip) / (unorm * std::sqrt(tn)));
  }
  return worst;
}

}  // namespace gjms6
