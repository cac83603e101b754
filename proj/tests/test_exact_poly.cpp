#include <random>

#include "doctest.h"
#include "gjms6/exact_poly.hpp"
#include "gjms6/gjms6.hpp"

using namespace gjms6;

namespace {
MultiPoly X(int i) { return MultiPoly::variable(i); }

MultiPoly random_poly(std::mt19937& rng, int nv, int deg, int terms) {
  std::uniform_int_distribution<int> c(-5, 5), v(0, nv - 1), dd(0, deg);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    Exponent e = zero_exponent();
    int D = dd(rng);
    for (int k = 0; k < D; ++k) e[v(rng)]++;
    p.add_term(e, c(rng));
  }
  return p;
}
}  // namespace

TEST_CASE("laplacian examples") {
  CHECK(laplacian(X(0) * X(0), 3) == MultiPoly::constant(2));
  MultiPoly r2 = radius_sq(6);
  CHECK(laplacian(r2 * r2 * r2, 6) == Rational(60) * (r2 * r2));
  CHECK(laplacian(X(0) * X(1), 6).is_zero());
}

TEST_CASE("sphere and ball moments") {
  int n = 7;
  CHECK(sphere_integral(MultiPoly::constant(1), n) == MomentScalar::vol(1));
  CHECK(sphere_integral(X(0) * X(0), n) == MomentScalar::vol(rat(1, n + 1)));
  CHECK(ball_integral(MultiPoly::constant(1), n) == MomentScalar::vol(rat(1, n + 1)));
  CHECK(sphere_integral(X(0) * X(1) * X(1), n).is_zero());
  MomentScalar a = MomentScalar::vol(1);
  CHECK_THROWS(a += MomentScalar(1, MomentScalar::Unit::Pure));
}

TEST_CASE("integration by parts on the ball is exact") {
  std::mt19937 rng(11);
  int n = 4, d = n + 1;
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly p = random_poly(rng, d, 5, 6), q = random_poly(rng, d, 5, 6);
    MomentScalar lhs = ball_integral(laplacian(p, d) * q, n) - ball_integral(p * laplacian(q, d), n);
    MomentScalar rhs = sphere_integral(euler(p, d) * q - p * euler(q, d), n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("laplacian commutes with tangential permutations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly p = random_poly(rng, 4, 6, 8);
    // swap variables 0 and 1
    MultiPoly q;
    for (auto& [e, c] : p.terms()) {
      Exponent f = e;
      std::swap(f[0], f[1]);
      q.add_term(f, c);
    }
    MultiPoly lq = laplacian(q, 4), lp = laplacian(p, 4), back;
    for (auto& [e, c] : lq.terms()) {
      Exponent f = e;
      std::swap(f[0], f[1]);
      back.add_term(f, c);
    }
    CHECK(back == lp);
  }
}

TEST_CASE("exponential modes") {
  MultiPoly T = X(ExpPolyMode::tvar), Y = X(ExpPolyMode::yvar);
  CHECK(mode_apply(ModeOp::Lap, ExpPolyMode(MultiPoly::constant(1))).profile.is_zero());
  CHECK(mode_apply(ModeOp::Dy, ExpPolyMode(Y)).profile == MultiPoly::constant(1) - T * Y);
  CHECK(mode_apply(ModeOp::Lap, ExpPolyMode(Y * Y)).profile == MultiPoly::constant(2) - Rational(4) * (T * Y));
  // profiles of degree <= 2 in y are triharmonic
  MultiPoly p = X(2) + X(3) * Y + X(4) * Y * Y;
  ExpPolyMode m(p);
  for (int i = 0; i < 3; ++i) m = mode_apply(ModeOp::Lap, m);
  CHECK(m.profile.is_zero());
  CHECK(apply_L6(ModelGeometry(Kind::UpperHalfSpace, 7), ExpPolyMode(p)).profile.is_zero());
}

TEST_CASE("conformally flat curvature") {
  ModelGeometry g(Kind::UpperHalfSpace, 7);
  auto z = conformally_flat_curvature(MultiPoly(), g);
  CHECK(z.eH_hat.is_zero());
  CHECK(z.trace_P_hat.is_zero());
  auto c = conformally_flat_curvature(X(7), g);
  CHECK(c.eH_hat == MultiPoly::constant(-7));
  CHECK(c.P_hat_eta_eta == MultiPoly::constant(rat(1, 2)));
  CHECK(c.weyl_zero);
  CHECK_THROWS(conformally_flat_curvature(X(0), ModelGeometry(Kind::RoundHemisphere, 7)));
}
