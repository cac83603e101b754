#include <cmath>

#include "doctest.h"
#include "gjms6/boundary_ops.hpp"
#include "gjms6/gjms6.hpp"
#include "gjms6/mode_solver.hpp"

using namespace gjms6;

namespace {

// prod_k (-Lap + c_k) on a mode series; flat models use c_k = 0
Series<Rational> l6_mode(const ExactModeBasis& b, const Series<Rational>& F) {
  WarpedModeCtx<Rational> ctx(b.w, b.lambda);
  std::array<Rational, 3> cs{0, 0, 0};
  if (b.geom.kind == Kind::RoundHemisphere) cs = hemisphere_factor_constants(b.geom.n);
  ModeSeries<Rational> u = ctx.mode(F);
  for (int k = 0; k < 3; ++k) u = ctx.lap(u) - cs[k] * u, u = Rational(-1) * u;
  return u.s;
}

bool zero_where_valid(const Series<Rational>& s) {
  for (int k = 0; k < s.valid; ++k)
    if (s.c[k] != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("ball mode solve examples") {
  auto r = ball_mode_solve(7, 1, {1, 2, 8});
  CHECK(r.coeffs == std::array<Rational, 3>{1, 0, 0});
  auto z = ball_mode_solve(7, 3, {0, 0, 0});
  CHECK(z.coeffs == std::array<Rational, 3>{0, 0, 0});
  // u = 1 on the ball, n = 7
  auto one = ball_mode_solve(7, 0, {1, 1, rat(8, 3)});
  CHECK(one.coeffs == std::array<Rational, 3>{1, 0, 0});
  CHECK(one.achieved.psi == rat(8, 3));
}

TEST_CASE("half-space solve, exact and symbolic") {
  Rational t = rat(3, 2);
  auto r = halfspace_solve(t, {1, 0, 0});
  CHECK(r.coeffs == std::array<Rational, 3>{1, t, t * t / 3});
  r = halfspace_solve(t, {0, 1, 0});
  CHECK(r.coeffs == std::array<Rational, 3>{0, -1, -t});
  r = halfspace_solve(t, {0, 0, 1});
  CHECK(r.coeffs == std::array<Rational, 3>{0, 0, rat(1, 2)});
  CHECK_THROWS_AS(halfspace_solve(Rational(0), {1, 0, 0}), std::domain_error);

  MultiPoly T = MultiPoly::variable(ExpPolyMode::tvar);
  HalfspaceSymbolic h = halfspace_solve(BoundaryTriple<MultiPoly>{MultiPoly::constant(1), MultiPoly(), MultiPoly()});
  CHECK(h.a == MultiPoly::constant(1));
  CHECK(h.b == T);
  CHECK(h.c == rat(1, 3) * (T * T));
  // symbolic data f, phi, psi as free variables 2, 3, 4
  BoundaryTriple<MultiPoly> d{MultiPoly::variable(2), MultiPoly::variable(3), MultiPoly::variable(4)};
  h = halfspace_solve(d);
  ModelGeometry hs(Kind::UpperHalfSpace, 7);
  for (int j = 0; j < 3; ++j) CHECK(apply_B(j, hs, h.mode) == d[j]);
}

TEST_CASE("exact bases lie in the kernel of L6") {
  for (int n : {5, 6, 7, 9}) {
    for (Kind k : {Kind::EuclideanBall, Kind::RoundHemisphere}) {
      ModelGeometry g(k, n);
      for (int ell : {0, 1, 2, 5}) {
        ExactModeBasis b = exact_mode_basis(g, ModeIndex::harmonic(ell));
        for (auto& F : b.basis) CHECK(zero_where_valid(l6_mode(b, F)));
      }
    }
    ExactModeBasis b = exact_mode_basis(ModelGeometry(Kind::UpperHalfSpace, n), ModeIndex::frequency(rat(5, 3)));
    for (auto& F : b.basis) CHECK(zero_where_valid(l6_mode(b, F)));
  }
}

TEST_CASE("kernel_check") {
  CHECK(kernel_check(ModelGeometry(Kind::UpperHalfSpace, 7), ModeIndex::frequency(1)));
  CHECK_FALSE(kernel_check(ModelGeometry(Kind::UpperHalfSpace, 7), ModeIndex::frequency(0)));
  CHECK(kernel_check(ModelGeometry(Kind::EuclideanBall, 7), ModeIndex::harmonic(0)));
  for (int n = 5; n <= 10; ++n)
    for (Kind k : {Kind::EuclideanBall, Kind::RoundHemisphere, Kind::HyperbolicGeodesic})
      for (int ell = 0; ell <= 8; ++ell) CHECK(kernel_check(ModelGeometry(k, n), ModeIndex::harmonic(ell)));
}

TEST_CASE("hemisphere collocation matches the exact basis") {
  CHECK(hemisphere_mode_solve(7, 2, {0, 0, 0}).profile.w.norm() == 0);
  auto r = hemisphere_mode_solve(7, 1, {0, 1, 0});
  CHECK(r.neumann.phi == doctest::Approx(480).epsilon(1e-10));
  for (int n : {5, 7, 8}) {
    for (int ell : {0, 1, 4, 12}) {
      Triple d{rat(1, 3), rat(-2, 7), rat(5, 4)};
      auto ex = solve_mode_exact(exact_mode_basis(ModelGeometry(Kind::RoundHemisphere, n), ModeIndex::harmonic(ell)), d);
      auto co = hemisphere_mode_solve(n, ell, {d.f.get_d(), d.phi.get_d(), d.psi.get_d()});
      for (int i = 0; i < 3; ++i) {
        double scale = std::abs(ex.neumann[i].get_d()) + 1;
        CHECK(std::abs(co.neumann[i] - ex.neumann[i].get_d()) / scale < 1e-9);
        CHECK(std::abs(co.achieved[i] - d[i].get_d()) < 1e-10);
      }
      CHECK(factorized_weak_residual(co.profile) < 1e-10);
      CHECK(co.cond < 1e12);
    }
  }
}

TEST_CASE("weak residual detects a non-solution") {
  auto co = hemisphere_mode_solve(7, 1, {1, 0, 0});
  ModeField bad = co.profile;
  for (int i = 0; i < bad.w.size(); ++i) bad.w(i) += 0.01 * bad.z[i] * bad.z[i];
  CHECK(factorized_weak_residual(bad) > 1e-4);
}
