#include "doctest.h"
#include "gjms6/gjms6.hpp"

using namespace gjms6;

TEST_CASE("L6 on flat models") {
  ModelGeometry g(Kind::EuclideanBall, 5);
  MultiPoly x = MultiPoly::variable(0);
  CHECK(apply_L6(g, x * x).is_zero());
  MultiPoly r2 = radius_sq(6);
  CHECK(apply_L6(g, r2 * r2 * r2) == MultiPoly::constant(-23040));
  CHECK_THROWS(apply_L6(ModelGeometry(Kind::RoundHemisphere, 7), x));
}

TEST_CASE("hemisphere factorization, Q6 and the general display agree") {
  CHECK(apply_L6_constant(ModelGeometry(Kind::RoundHemisphere, 7), 1) == 720);
  CHECK(q6_constant_curvature(6) == 120);
  CHECK(q6_constant_curvature(8) == 720);
  CHECK_THROWS(q6_constant_curvature(5));
  for (int n = 6; n <= 12; ++n) {
    ModelGeometry g(Kind::RoundHemisphere, n);
    CHECK(apply_L6_constant(g, 1) == Rational(n - 5) / 2 * q6_constant_curvature(n + 1));
    for (int ell = 0; ell <= 6; ++ell) {
      Rational mu = Rational(ell) * (ell + n);
      CHECK(l6_round_display(n, mu) == hemisphere_L6_eigenvalue(n, ell));
    }
  }
}

TEST_CASE("T4 on the models") {
  std::vector<Rational> du = {1, 0, 0};
  auto z = t4_action(ModelGeometry(Kind::EuclideanBall, 7), du);
  for (auto& v : z) CHECK(v == 0);
  auto h = t4_action(ModelGeometry(Kind::RoundHemisphere, 7), du);
  Rational J = 4, Psq = 2;
  CHECK(h[0] == rat(3 * 49 - 42 - 13, 4) * J * J - 16 * Psq - 48 * J * rat(1, 2) + 12);
  CHECK(h[1] == 0);
  // flat boundary in normal form
  CHECK(t4_eta_eta_normal_form(7, 0, 0, 0) == 0);
}
