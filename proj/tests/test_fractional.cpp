#include "doctest.h"
#include "gjms6/fractional.hpp"
#include "gjms6/gjms6.hpp"

using namespace gjms6;

TEST_CASE("multiplier examples") {
  CHECK(multiplier(Boundary::Round, 7, 1, ModeIndex::harmonic(0)) == rat(35, 4));
  CHECK(multiplier(Boundary::Round, 7, rat(5, 2), ModeIndex::harmonic(0)) == 120);
  CHECK(multiplier(Boundary::Flat, 7, rat(1, 2), ModeIndex::frequency(2)) == 2);
  CHECK_THROWS_AS(multiplier(Boundary::Round, 5, rat(5, 2), ModeIndex::harmonic(0)), std::domain_error);
  CHECK_THROWS(multiplier(Boundary::Round, 7, rat(1, 3), ModeIndex::harmonic(0)));
}

TEST_CASE("integer orders agree with operators in closed form") {
  for (int n = 5; n <= 12; ++n)
    for (int ell = 0; ell <= 10; ++ell) {
      Rational h = Rational(ell) + Rational(n, 2);
      Rational m1 = multiplier(Boundary::Round, n, 1, ModeIndex::harmonic(ell));
      CHECK(m1 == h * (h - 1));
      // conformal Laplacian -Lapbar + (n-2)/(4(n-1)) R-bar
      CHECK(m1 == Rational(ell) * (ell + n - 1) + rat(n * (n - 2), 4));
      // P6 on the boundary of the hemisphere one dimension up is the L6 eigenvalue
      if (n >= 6) CHECK(multiplier(Boundary::Round, n + 1, 3, ModeIndex::harmonic(ell)) == hemisphere_L6_eigenvalue(n, ell));
    }
}

TEST_CASE("scattering T2, T4") {
  auto e = scattering_T2_T4(7, 6, Boundary::Round, ModeIndex::harmonic(0));
  CHECK(e.T2 == rat(-7, 12));
  Rational t = rat(3, 2), s = rat(23, 5);
  e = scattering_T2_T4(7, s, Boundary::Flat, ModeIndex::frequency(t));
  CHECK(e.T2 == -t * t / (2 * (2 * s - 9)));
  CHECK_THROWS_AS(scattering_T2_T4(7, rat(9, 2), Boundary::Round, ModeIndex::harmonic(1)), std::domain_error);
  CHECK_THROWS_AS(scattering_T2_T4(7, rat(11, 2), Boundary::Round, ModeIndex::harmonic(1)), std::domain_error);
  // against the Frobenius series of the scattering equation
  for (int n : {5, 6, 7, 10})
    for (Rational s : {rat(6, 1), rat(17, 3), rat(31, 4), rat(9, 7)}) {
      if (2 * s == n + 2 || 2 * s == n + 4) {
        CHECK_THROWS_AS(scattering_series(n, s, Boundary::Round, ModeIndex::harmonic(1)), std::domain_error);
        continue;
      }
      for (int ell : {0, 1, 3}) {
        auto f = scattering_series(n, s, Boundary::Round, ModeIndex::harmonic(ell));
        auto x = scattering_T2_T4(n, s, Boundary::Round, ModeIndex::harmonic(ell));
        CHECK(f[1] == 0);
        CHECK(f[2] == x.T2);
        CHECK(f[3] == 0);
        CHECK(f[4] == x.T4);
      }
      auto f = scattering_series(n, s, Boundary::Flat, ModeIndex::frequency(rat(2, 3)));
      auto x = scattering_T2_T4(n, s, Boundary::Flat, ModeIndex::frequency(rat(2, 3)));
      CHECK(f[2] == x.T2);
      CHECK(f[4] == x.T4);
    }
}

TEST_CASE("DtN identities") {
  auto res = dtn_symbolic_halfspace();
  for (auto& p : res) CHECK(p.is_zero());

  ModelGeometry ball(Kind::EuclideanBall, 7);
  auto r = ball_mode_solve(7, 1, {1, 0, 0});
  CHECK(r.neumann.f == 1920);

  Triple mixed{rat(2, 3), rat(-5, 4), rat(7, 2)};
  for (int n : {5, 6, 7, 9, 12})
    for (Kind k : {Kind::EuclideanBall, Kind::RoundHemisphere, Kind::HyperbolicGeodesic})
      for (int ell : {0, 1, 2, 7}) {
        CheckReport c = dtn_verify(ModelGeometry(k, n), ModeIndex::harmonic(ell), mixed);
        CHECK_MESSAGE(c.pass, kind_name(k), " n=", n, " l=", ell);
      }
  CHECK(dtn_verify(ModelGeometry(Kind::UpperHalfSpace, 7), ModeIndex::frequency(rat(5, 2)), mixed).pass);
  CHECK_FALSE(dtn_verify(ModelGeometry(Kind::UpperHalfSpace, 7), ModeIndex::frequency(0), mixed).pass);

  for (int ell : {0, 1, 5, 20, 32}) CHECK(dtn_verify_collocated(7, ell, {0.3, -1.1, 2.0}).pass);
  CHECK(dtn_verify_collocated(5, 3, {1, 0, 0}).pass);
}

TEST_CASE("DtN self-adjointness") {
  ModelGeometry ball(Kind::EuclideanBall, 7);
  auto s = dtn_selfadjointness(ball, 5, {ModeIndex::harmonic(0), ModeIndex::harmonic(1), ModeIndex::harmonic(2)});
  CHECK(s.report.pass);
  CHECK(s.multipliers == std::vector<Rational>{rat(8, 3) * 120, rat(8, 3) * 720, rat(8, 3) * 2520});
  auto f = dtn_selfadjointness(ModelGeometry(Kind::UpperHalfSpace, 7), 1, {ModeIndex::frequency(rat(1, 2)), ModeIndex::frequency(3)});
  CHECK(f.report.pass);
  CHECK(f.multipliers == std::vector<Rational>{rat(3, 2), 9});
  for (Kind k : {Kind::RoundHemisphere, Kind::HyperbolicGeodesic})
    for (int j : {1, 3, 5}) CHECK(dtn_selfadjointness(ModelGeometry(k, 8), j, {ModeIndex::harmonic(0), ModeIndex::harmonic(4)}).report.pass);
}
