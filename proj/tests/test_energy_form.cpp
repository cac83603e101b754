#include <cmath>
#include <random>

#include "doctest.h"
#include "gjms6/energy_form.hpp"

using namespace gjms6;

namespace {

MultiPoly random_poly(std::mt19937& rng, int nvars, int maxdeg, int terms) {
  std::uniform_int_distribution<int> var(0, nvars - 1), deg(0, maxdeg), coef(-4, 4);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    Exponent e{};
    int dd = deg(rng);
    for (int k = 0; k < dd; ++k) e[var(rng)]++;
    int c = coef(rng);
    if (c) p.add_term(e, c);
  }
  return p;
}

}  // namespace

TEST_CASE("Q6 on the ball") {
  ModelGeometry ball(Kind::EuclideanBall, 7);
  MultiPoly x1 = MultiPoly::variable(0), x2 = MultiPoly::variable(1);
  CHECK(q6_form(ball, MultiPoly(), MultiPoly()).total.is_zero());
  CHECK(q6_form(ball, x1, x2).total.is_zero());
  auto e = q6_form(ball, x1, x1);
  CHECK(e.total == MomentScalar::vol(576));
  CHECK(e.interior.is_zero());
  // multiplier route: data (1, 2, 8), oint x1^2 = Vol/8
  Rational m = multiplier_energy(Boundary::Round, 7, ModeIndex::harmonic(1), {1, 2, 8});
  CHECK(m == 4608);
  CHECK(m * sphere_integral(x1 * x1, 7).q == 576);
  CHECK(symmetry_residual(ball, x1, x2 * x2).is_zero());
  std::mt19937 rng(7);
  for (int i = 0; i < 6; ++i) {
    MultiPoly u = random_poly(rng, 8, 5, 3), v = random_poly(rng, 8, 5, 3);
    CHECK(symmetry_residual(ball, u, v).is_zero());
  }
  CHECK_THROWS(q6_form(ModelGeometry(Kind::RoundHemisphere, 7), x1, x1));
}

TEST_CASE("half-space modes: Q6, symmetry and the F_I/F_B split") {
  ModelGeometry hs(Kind::UpperHalfSpace, 7);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    Rational t = rat(1 + trial % 4, 1 + trial % 3);
    ExpMode u{t, {}}, v{t, {}};
    for (int k = 0; k < 5; ++k) u.p.push_back(c(rng)), v.p.push_back(c(rng));
    auto a = q6_form(7, u, v), b = q6_form(7, v, u);
    CHECK(a.total == b.total);
    auto d = fi_fb_decompose(hs, u, v);
    CHECK(d.FI + d.FB == a.total);
    auto d2 = fi_fb_decompose(hs, v, u);
    CHECK(d.FI == d2.FI);
    CHECK(d.FB == d2.FB);
  }
  CHECK_THROWS(fi_fb_decompose(ModelGeometry(Kind::EuclideanBall, 7), ExpMode{1, {1}}, ExpMode{1, {1}}));
  // L6-harmonic mode: energy is the multiplier pairing
  Rational t = rat(3, 2);
  auto h = halfspace_solve(t, {rat(1, 2), -1, 3});
  ExpMode u{t, {h.coeffs[0], h.coeffs[1], h.coeffs[2]}};
  auto e = q6_form(7, u, u);
  CHECK(e.interior == 0);
  CHECK(e.total == multiplier_energy(Boundary::Flat, 7, ModeIndex::frequency(t), {rat(1, 2), -1, 3}));
}

TEST_CASE("corollary displays reproduce the multiplier energy") {
  for (int n : {5, 6, 7, 8, 11})
    for (int ell : {0, 1, 2, 6}) {
      Triple d{rat(3, 5), rat(-1, 2), rat(7, 3)};
      CHECK(ball_display_energy(n, ell, d) == multiplier_energy(Boundary::Round, n, ModeIndex::harmonic(ell), d));
      double want = multiplier_energy(Boundary::Round, n, ModeIndex::harmonic(ell), d).get_d();
      double got = hemisphere_display_energy(n, ell, {0.6, -0.5, 7.0 / 3});
      CHECK(std::abs(got - want) <= 1e-9 * std::abs(want));
    }
}

TEST_CASE("Dirichlet eigenvalue and zero-data energy") {
  auto est = dirichlet_eigen_lower(ModelGeometry(Kind::EuclideanBall, 7), {0, 1, 2, 3, 4, 5, 6, 7, 8}, 12);
  CHECK(est.definite);
  CHECK(est.lambda_lower > 0);
  // (1 - r)^3 r-type profile with zero data: (1 - r^2)^3 r^2 at ell = 0
  RadialMode m{0, {0, 0, 1, 0, -3, 0, 3, 0, -1}};
  CHECK(ball_grad_lap_sq(7, m) > 0);
}

TEST_CASE("energy lower bound on the ball") {
  std::mt19937 rng(11);
  std::vector<MultiPoly> q{MultiPoly()};
  for (int i = 0; i < 5; ++i) q.push_back(random_poly(rng, 8, 2, 2));
  auto r = trace_lower_bound_check(7, 1, MultiPoly::variable(0), {1, 2, 8}, q);
  CHECK(r.report.pass);
  CHECK(r.energy == 576);
  CHECK(r.gaps[0] == 0);
  auto c = trace_lower_bound_check(7, 0, MultiPoly::constant(1), {1, 0, 0}, {});
  CHECK(c.energy == rat(8, 3) * 120);
}
