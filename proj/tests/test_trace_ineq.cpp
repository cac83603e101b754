#include <boost/math/special_functions/gegenbauer.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gjms6/trace_ineq.hpp"

using namespace gjms6;
using S = ExtremalSpec;

namespace {

S bubble(double a, double c, double eps = 1) { return S{S::Shape::PowerBubble, a, c, eps}; }
S log_bubble(double a, double c, double eps = 1) { return S{S::Shape::LogBubble, a, c, eps}; }

std::array<SlotField, 3> fields(Kind g, int n, const std::array<S, 3>& s) {
  return {extremal_field(g, n, 0, s[0]), extremal_field(g, n, 1, s[1]), extremal_field(g, n, 2, s[2])};
}

}  // namespace

TEST_CASE("sharp constants") {
  SharpConstant c = sharp_constant(7, rat(1, 2));
  CHECK(c.coeff == 3);
  CHECK(c.vol_power == rat(1, 7));
  CHECK(sphere_volume(7) == doctest::Approx(std::pow(M_PI, 4) / 3).epsilon(1e-14));
  CHECK(c.value() == doctest::Approx(3 * std::pow(std::pow(M_PI, 4) / 3, 1.0 / 7)).epsilon(1e-14));
  CHECK(sharp_constant(7, rat(5, 2)).coeff == 120);
  CHECK(sharp_constant(7, rat(5, 2)).vol_power == rat(5, 7));
  CHECK_THROWS_AS(sharp_constant(5, rat(5, 2)), std::domain_error);
  CHECK_THROWS_AS(sharp_constant(4, rat(5, 2)), std::domain_error);
  for (int n = 6; n <= 12; ++n)
    for (int k : {1, 3, 5}) {
      ExactEquality e = constant_equality(n, rat(k, 2));
      CHECK(e.equal);
      CHECK(e.rhs_vol_power == 1);
    }
}

TEST_CASE("zonal expansion") {
  int n = 7;
  CHECK(zonal_integral(n, [](double) { return 1.0; }) == doctest::Approx(sphere_volume(n)).epsilon(1e-13));
  ZonalExpansion z = zonal_expand(n, [](double t) { return boost::math::gegenbauer(3u, 3.0, t); }, 8);
  for (int l = 0; l <= 8; ++l) {
    if (l == 3)
      CHECK(z.coeff[l] == doctest::Approx(1).epsilon(1e-13));
    else
      CHECK(std::abs(z.coeff[l]) < 1e-13);
  }
  CHECK(std::abs(z.tail) < 1e-12 * z.l2_sq);
}

TEST_CASE("sphere Sobolev") {
  InequalityReport r = sphere_sobolev_check(7, rat(5, 2), [](double t) { return 1 / (1 + 0.5 * t); });
  CHECK(std::abs(r.relative_gap) <= 1e-6);
  CHECK(r.report.pass);
  // no l <= 1 content: strictly above the sharp constant
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-1, 1);
  for (int k = 0; k < 5; ++k) {
    double c2 = U(rng), c3 = U(rng), c4 = U(rng);
    auto w = [=](double t) {
      return c2 * boost::math::gegenbauer(2u, 3.0, t) + c3 * boost::math::gegenbauer(3u, 3.0, t) +
             c4 * boost::math::gegenbauer(4u, 3.0, t);
    };
    for (int g : {1, 3, 5}) CHECK(sphere_sobolev_check(7, rat(g, 2), w).relative_gap > 1e-3);
  }
  CHECK_THROWS_AS(sphere_sobolev_check(7, rat(5, 2), [](double t) { return 1 / (1 + 0.995 * t); }, {8, 256}),
                  std::domain_error);
}

TEST_CASE("corollary equality on extremals") {
  TraceConfig cfg;
  cfg.lmax = 20;
  std::array<S, 3> sp{bubble(1.0, 0.5, 0.5), bubble(-0.7, -0.3, 2.0), bubble(0.4, 0.2)};
  for (Kind g : {Kind::EuclideanBall, Kind::RoundHemisphere, Kind::UpperHalfSpace}) {
    InequalityReport r = corollary_check(g, 7, sp, cfg);
    CHECK_MESSAGE(std::abs(r.relative_gap) <= 1e-6, kind_name(g));
    CHECK(r.report.pass);
    if (r.has_display) CHECK(std::abs(r.lhs - r.lhs_display) <= 1e-8 * r.lhs);
    // amplitude scaling: both sides quadratic
    std::array<S, 3> sp2 = sp;
    for (auto& s : sp2) s.a *= 3;
    InequalityReport r2 = corollary_check(g, 7, sp2, cfg);
    CHECK(std::abs(r2.lhs / r.lhs - 9) <= 1e-10 * 9);
    CHECK(std::abs(r2.rhs / r.rhs - 9) <= 1e-10 * 9);
  }
  // centered half-space bubbles with eps = 1 transport to constants
  InequalityReport u = corollary_check(Kind::UpperHalfSpace, 7, {bubble(1, 0), bubble(1, 0), bubble(1, 0)}, cfg);
  CHECK(std::abs(u.relative_gap) <= 1e-6);
  // ball and hemisphere share the boundary sphere
  InequalityReport b = corollary_check(Kind::EuclideanBall, 8, sp, cfg);
  InequalityReport h = corollary_check(Kind::RoundHemisphere, 8, sp, cfg);
  CHECK(std::abs(b.gap - h.gap) <= 1e-8 * b.lhs);
}

TEST_CASE("corollary strict on non-extremal data") {
  TraceConfig cfg;
  cfg.lmax = 20;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(-1, 1);
  int n = 7;
  for (Kind g : {Kind::EuclideanBall, Kind::RoundHemisphere}) {
    for (int k = 0; k < 3; ++k) {
      std::array<SlotField, 3> f;
      for (int i = 0; i < 3; ++i) {
        double w = slot_weight(n, i).get_d(), c = 0.4 * U(rng), d = 0.3 * U(rng), e = 0.3 * U(rng);
        f[i].sphere = [=](double t) { return std::pow(1 + c * t, -w) + d * t * t + e * t * t * t; };
      }
      InequalityReport r = corollary_check(g, n, f, cfg);
      CHECK(r.relative_gap > 1e-8);
      CHECK(std::abs(r.lhs - r.lhs_display) <= 1e-8 * r.lhs);
    }
  }
  for (int k = 0; k < 3; ++k) {
    std::array<SlotField, 3> f;
    for (int i = 0; i < 3; ++i) {
      double w = slot_weight(n, i).get_d(), d = 0.5 * U(rng);
      f[i] = halfspace_radial_field(n, i, [=](double r) {
        double q = 1 + r * r;
        return std::pow(q, -w) * (1 + d * r * r / q);
      });
    }
    CHECK(corollary_check(Kind::UpperHalfSpace, n, f, cfg).relative_gap > 1e-8);
  }
  CHECK_THROWS_AS(corollary_check(Kind::EuclideanBall, 5, {bubble(1, 0), bubble(1, 0), bubble(1, 0)}),
                  std::domain_error);
  CHECK_THROWS_AS(extremal_field(Kind::EuclideanBall, 7, 0, log_bubble(1, 0)), std::invalid_argument);
}

TEST_CASE("critical Onofri branch") {
  TraceConfig cfg;
  cfg.lmax = 20;
  cfg.tol = 1e-5;
  // f constant, phi = psi = 0
  std::array<SlotField, 3> c;
  c[0].sphere = [](double) { return 2.0; };
  c[1].sphere = c[2].sphere = [](double) { return 0.0; };
  InequalityReport z = critical_check(Kind::EuclideanBall, c, cfg);
  CHECK(std::abs(z.lhs) <= 1e-10);
  CHECK(std::abs(z.rhs) <= 1e-10);  // ln(1 + roundoff) times ~80

  InequalityReport b = critical_check(Kind::EuclideanBall, {log_bubble(0.2, 0.3), bubble(1, 0), bubble(1, 0)}, cfg);
  CHECK(std::abs(b.gap) <= 1e-5);
  InequalityReport u =
      critical_check(Kind::UpperHalfSpace, {log_bubble(0.2, 0.4, 0.7), bubble(1, 0.2, 1.5), bubble(-1, 0, 0.8)}, cfg);
  CHECK(std::abs(u.gap) <= 1e-5);
  std::array<S, 3> hs{log_bubble(0, 0), bubble(1, 0), bubble(1, 0)};
  InequalityReport h = critical_check(Kind::RoundHemisphere, hs, cfg);
  CHECK(std::abs(h.relative_gap) <= 1e-6);
  CHECK(hemisphere_critical_residual(fields(Kind::RoundHemisphere, 5, hs), 8) <= 1e-8);

  // non-extremal f
  std::array<SlotField, 3> p = fields(Kind::EuclideanBall, 5, {log_bubble(0, 0.3), bubble(1, 0), bubble(1, 0)});
  p[0].sphere = [](double t) { return -std::log(1 + 0.3 * t) + 0.2 * t * t; };
  CHECK(critical_check(Kind::EuclideanBall, p, cfg).relative_gap > 1e-8);
}
