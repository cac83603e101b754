#include <random>

#include "doctest.h"
#include "gjms6/boundary_ops.hpp"

using namespace gjms6;

namespace {

Series<Rational> random_series(std::mt19937& rng, int K) {
  std::uniform_int_distribution<int> c(-9, 9), d(1, 4);
  Series<Rational> s(K);
  for (int k = 0; k <= K; ++k) s.c[k] = rat(c(rng), d(rng));
  return s;
}

// max over j of |generic - stencil| on random profiles
bool lists_agree(const WarpedGeometry& w, const OperatorList& L, int n, std::mt19937& rng, std::string& why) {
  for (int ell : {0, 1, 3}) {
    Rational lambda = Rational(ell) * (ell + n - 1);
    if (w.kappa == 0) lambda = Rational(ell * ell, 4);
    for (int trial = 0; trial < 3; ++trial) {
      Series<Rational> F = random_series(rng, w.K);
      WarpedModeCtx<Rational> ctx(w, lambda);
      for (int j = 0; j <= 5; ++j) {
        Rational a = apply_B_mode(j, w, lambda, F);
        Rational b = evaluate_stencil(L.B[j], ctx, F);
        if (a != b) {
          why = L.name + " j=" + std::to_string(j) + " ell=" + std::to_string(ell) + " diff=" + to_string(a - b);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("curvature coefficients on the models") {
  auto h = coefficients(ModelGeometry(Kind::UpperHalfSpace, 7));
  for (const Rational* v : {&h.T1, &h.T2, &h.T3, &h.T4c, &h.T5, &h.S2, &h.S3, &h.S4, &h.R13, &h.R23}) CHECK(*v == 0);
  for (int n = 5; n <= 10; ++n) {
    auto b = coefficients(ModelGeometry(Kind::EuclideanBall, n));
    CHECK(b.T1 == 1);
    CHECK(b.T2 == rat(2 * n - 6, 3));
    CHECK(Rational(n - 5) / 2 * b.T2 == rat((n - 3) * (n - 5), 3));
  }
  CHECK(coefficients(ModelGeometry(Kind::EuclideanBall, 7)).T2 == rat(8, 3));
}

TEST_CASE("apply_B examples") {
  ModelGeometry up(Kind::UpperHalfSpace, 7), ball(Kind::EuclideanBall, 7);
  MultiPoly one = MultiPoly::constant(1);
  for (auto* g : {&up, &ball}) CHECK(apply_B(0, *g, one) == one);
  MultiPoly y = MultiPoly::variable(7);
  CHECK(apply_B(3, up, y * y * y) == MultiPoly::constant(-6));
  MultiPoly x1 = MultiPoly::variable(0);
  CHECK(apply_B(1, ball, x1) == Rational(2) * x1);
  CHECK(apply_B(2, ball, x1) == Rational(8) * x1);
  CHECK_THROWS(apply_B(6, up, one));
  CHECK_THROWS(apply_B(1, ModelGeometry(Kind::RoundHemisphere, 7), one));
  // hyperbolic B1 = -d_r
  auto w = warped_model(ModelGeometry(Kind::HyperbolicGeodesic, 7));
  Series<Rational> F = series_poly(w.K, {3, 5, 7});
  CHECK(apply_B_mode(1, w, Rational(8), F) == -5);
}

TEST_CASE("generic formulas agree with the specialised operator lists") {
  std::mt19937 rng(2024);
  std::string why;
  for (int n : {5, 6, 7, 9}) {
    INFO("n=" << n);
    {
      auto w = warped_model(ModelGeometry(Kind::UpperHalfSpace, n));
      CHECK_MESSAGE(lists_agree(w, halfspace_operators(), n, rng, why), why);
      CHECK_MESSAGE(lists_agree(w, normal_form_operators(n, 0), n, rng, why), why);
    }
    auto wb = warped_model(ModelGeometry(Kind::EuclideanBall, n));
    CHECK_MESSAGE(lists_agree(wb, ball_operators(n), n, rng, why), why);
    auto wh = warped_model(ModelGeometry(Kind::RoundHemisphere, n));
    CHECK_MESSAGE(lists_agree(wh, hemisphere_operators(n), n, rng, why), why);
    auto wg = warped_model(ModelGeometry(Kind::HyperbolicGeodesic, n));
    CHECK_MESSAGE(lists_agree(wg, geodesic_forms(n), n, rng, why), why);
    auto wn = normal_form_warped(n);
    CHECK_MESSAGE(lists_agree(wn, normal_form_operators(n), n, rng, why), why);
  }
}

TEST_CASE("printed B4 disagrees with the ball list") {
  // the ball has H = n, so both B4 corrections show up in Lap-bar u
  std::mt19937 rng(3);
  int n = 7;
  auto w = warped_model(ModelGeometry(Kind::EuclideanBall, n));
  Rational lambda = 3 * (3 + n - 1);
  Series<Rational> F = random_series(rng, w.K);
  WarpedModeCtx<Rational> ctx(w, lambda);
  BoundaryFormulas<WarpedModeCtx<Rational>> bf(ctx, n);
  bf.printed_b4 = true;
  Rational printed = bf.apply(4, ctx.mode(F)).v;
  CHECK(printed != evaluate_stencil(ball_operators(n).B[4], ctx, F));
}

TEST_CASE("geodesic delta-bar convention") {
  std::mt19937 rng(9);
  std::string why;
  int n = 7;
  auto wg = warped_model(ModelGeometry(Kind::HyperbolicGeodesic, n));
  CHECK_FALSE(lists_agree(wg, geodesic_forms(n, DeltaBarConvention::NegativeDivergence), n, rng, why));
}

TEST_CASE("operator list spot values") {
  auto nf = normal_form_operators(7);
  bool found = false;
  for (auto& t : nf.B[3])
    if (t.jet == Jet::EtaU && t.lapbar_pow == 0) {
      // 4(n-1)/3 Jbar with Jbar = 7/2
      CHECK(t.coeff == Rational(8) * rat(7, 2));
      found = true;
    }
  CHECK(found);
  // B2 of a constant at round infinity, n = 7
  auto w = warped_model(ModelGeometry(Kind::HyperbolicGeodesic, 7));
  WarpedModeCtx<Rational> ctx(w, Rational(0));
  CHECK(evaluate_stencil(geodesic_forms(7).B[2], ctx, series_poly(w.K, {1})) == rat(7, 6));
  // B3 of a profile with d_r u = 0
  CHECK(evaluate_stencil(geodesic_forms(7).B[3], ctx, series_poly(w.K, {2, 0, 1})) == 0);
}

TEST_CASE("critical collapse of the zeroth-order blocks") {
  for (Kind k : {Kind::EuclideanBall, Kind::RoundHemisphere, Kind::HyperbolicGeodesic}) {
    auto w = warped_model(ModelGeometry(k, 5));
    WarpedModeCtx<Rational> ctx(w, Rational(0));
    BoundaryFormulas<WarpedModeCtx<Rational>> bf(ctx, 5);
    CHECK(bf.half_crit() == 0);
  }
  CHECK(bidegree(3, 7)[1] == -4);
}
