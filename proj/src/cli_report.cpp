#include "gjms6/cli_report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>

#include "gjms6/boundary_ops.hpp"
#include "gjms6/conformal.hpp"
#include "gjms6/energy_form.hpp"
#include "gjms6/fractional.hpp"
#include "gjms6/gjms6.hpp"
#include "gjms6/mode_solver.hpp"
#include "gjms6/trace_ineq.hpp"

namespace gjms6 {

namespace {

const char* kVersion = "1.0.0";

bool is_trace_geom(const std::string& g) {
  return g == "halfspace" || g == "upper" || g == "ball" || g == "hemisphere";
}

std::string default_geometry(const std::string& suite) {
  if (suite == "covariance" || suite == "dtn") return "halfspace";
  if (suite == "symmetry" || suite == "trace" || suite == "critical") return "ball";
  return "";
}

struct Runner {
  const RunConfig& cfg;
  SuiteReport& rep;
  std::mt19937 rng;

  Runner(const RunConfig& c, SuiteReport& r) : cfg(c), rep(r), rng(c.seed) {}

  // fn fills pass/residual/exact; timing and bookkeeping here
  void run(const std::string& id, const std::string& tag, double tol, const std::function<void(CheckRecord&)>& fn) {
    CheckRecord c;
    c.id = id;
    c.tag = tag;
    c.tolerance = tol;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.residual = "nan";
      c.detail = std::string("error: ") + e.what();
    }
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.checks.push_back(std::move(c));
  }

  MultiPoly random_poly(const std::vector<int>& vars, int maxdeg, int terms) {
    std::uniform_int_distribution<int> var(0, int(vars.size()) - 1), deg(0, maxdeg), coef(-3, 3);
    MultiPoly p;
    for (int t = 0; t < terms; ++t) {
      Exponent e{};
      int dd = deg(rng);
      for (int k = 0; k < dd; ++k) e[vars[var(rng)]]++;
      int c = coef(rng);
      if (c) p.add_term(e, c);
    }
    return p;
  }

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
};

void exact_count(CheckRecord& c, std::size_t nonzero, const std::string& what) {
  c.exact = true;
  c.residual = std::to_string(nonzero);
  c.pass = nonzero == 0;
  c.detail = what;
}

void numeric(CheckRecord& c, double residual, const std::string& detail = "") {
  c.exact = false;
  c.residual = decimal(residual);
  c.pass = residual <= c.tolerance;
  c.detail = detail;
}

void suite_T_shift(Runner& R) {
  ModelGeometry h(Kind::UpperHalfSpace, 5);
  std::vector<MultiPoly> sig;
  for (int k = 0; k < 10; ++k) sig.push_back(R.random_poly({0, 1, kProbeY}, 3, 3));
  for (int j = 1; j <= 5; ++j)
    R.run("T_shift_j" + std::to_string(j), "critical-shift", 0, [&](CheckRecord& c) {
      std::size_t bad = 0;
      for (auto& s : sig) bad += critical_T_shift(j, s, h).terms();
      exact_count(c, bad, "e^{j sigma} That_j - T_j - B_j(sigma), 10 random sigma");
    });
}

// --- covariance -------------------------------------------------------------

void suite_covariance(Runner& R, int n) {
  ModelGeometry h(Kind::UpperHalfSpace, n);
  std::vector<int> vars{0, 1, kProbeY};
  const int probes = 50;
  std::vector<std::pair<MultiPoly, MultiPoly>> pr;
  for (int k = 0; k < probes; ++k) {
    MultiPoly s = R.random_poly(vars, 3, 3), u = R.random_poly(vars, 3, 3);
    pr.emplace_back(s, u);
  }
  for (int j = 0; j <= 5; ++j) {
    R.run("infinitesimal_B" + std::to_string(j) + "_n" + std::to_string(n), "conformal-covariance", 0,
          [&](CheckRecord& c) {
            std::size_t bad = 0;
            for (auto& [s, u] : pr) bad += infinitesimal_covariance_residual(j, {-rat(n - 5, 2), s}, u, h).terms();
            exact_count(c, bad, std::to_string(probes) + " random (sigma, u), nonzero residual terms");
          });
    R.run("finite_B" + std::to_string(j) + "_n" + std::to_string(n), "conformal-covariance", 0, [&](CheckRecord& c) {
      std::size_t bad = 0;
      for (int k = 0; k < 10; ++k) bad += finite_covariance_residual(j, pr[k].first, pr[k].second, h, 6).terms();
      exact_count(c, bad, "10 probes, truncation order 6, nonzero residual terms");
    });
  }
  if (n == 5) suite_T_shift(R);
}

// --- symmetry / energy --------------------------------------------------------

void suite_symmetry(Runner& R, Kind geom, int n) {
  if (geom == Kind::EuclideanBall) {
    ModelGeometry ball(geom, n);
    std::vector<int> vars;
    for (int i = 0; i <= n; ++i) vars.push_back(i);
    R.run("q6_symmetry_ball_n" + std::to_string(n), "symmetry", 0, [&](CheckRecord& c) {
      std::size_t bad = 0;
      for (int k = 0; k < 20; ++k) {
        // dense in x1..x3 so most pairs couple; sparse pairs are mostly orthogonal
        MultiPoly u = R.random_poly({0, 1, 2}, 5, 8) + R.random_poly(vars, 5, 1);
        MultiPoly v = R.random_poly({0, 1, 2}, 5, 8) + R.random_poly(vars, 5, 1);
        if (!symmetry_residual(ball, u, v).is_zero()) ++bad;
      }
      exact_count(c, bad, "20 random pairs of degree <= 5, asymmetric pairs");
    });
    R.run("energy_x1_ball_n" + std::to_string(n), "energy-identity", 0, [&](CheckRecord& c) {
      MultiPoly x1 = MultiPoly::variable(0);
      Triple d;
      for (int j = 0; j < 3; ++j) {
        MultiPoly b = apply_B(j, ball, x1);
        std::vector<Rational> pt(n + 1, Rational(0));
        pt[0] = 1;
        d[j] = b.eval_exact(pt);
      }
      MomentScalar poly = q6_form(ball, x1, x1).total;
      Rational mult = multiplier_energy(Boundary::Round, n, ModeIndex::harmonic(1), d) * sphere_integral(x1 * x1, n).q;
      Rational diff = poly.q - mult;
      c.exact = true;
      c.residual = to_string(diff);
      c.pass = diff == 0;
      c.detail = "E6(x1) = " + to_string(poly.q) + " Vol(S^n) by integration and by multipliers";
    });
    R.run("energy_lower_bound_ball_n" + std::to_string(n), "energy-lower-bound", 1e-10, [&](CheckRecord& c) {
      std::vector<MultiPoly> q{MultiPoly()};
      for (int k = 0; k < 99; ++k) q.push_back(R.random_poly(vars, 2, 2));
      LowerBoundResult r = trace_lower_bound_check(n, 1, MultiPoly::variable(0), {1, 2, 8}, q);
      numeric(c, r.report.residual, "100 zero-data perturbations, exact gaps");
      c.pass = r.report.pass;
    });
    R.run("dirichlet_definite_ball_n" + std::to_string(n), "energy-lower-bound", 0, [&](CheckRecord& c) {
      DirichletEigenEstimate e = dirichlet_eigen_lower(ball, {0, 1, 2, 3, 4});
      c.exact = true;
      c.pass = e.definite && e.lambda_lower > 0;
      c.residual = c.pass ? "0" : "1";
      c.detail = "exact LDL^T pivots positive, Galerkin lambda = " + decimal(e.lambda_lower);
    });
  } else if (geom == Kind::UpperHalfSpace) {
    ModelGeometry h(geom, n);
    R.run("q6_symmetry_halfspace_n" + std::to_string(n), "symmetry", 0, [&](CheckRecord& c) {
      std::size_t bad = 0;
      std::uniform_int_distribution<int> co(-4, 4), tt(1, 4);
      for (int k = 0; k < 20; ++k) {
        Rational t = tt(R.rng);
        ExpMode u{t, {co(R.rng), co(R.rng), co(R.rng)}}, v{t, {co(R.rng), co(R.rng), co(R.rng)}};
        BilinearDecomposition a = fi_fb_decompose(h, u, v), b = fi_fb_decompose(h, v, u);
        if (a.FI != b.FI || a.FB != b.FB || q6_form(n, u, v).total != a.FI + a.FB) ++bad;
      }
      exact_count(c, bad, "20 random exponential modes; F_I, F_B symmetric and summing to Q6");
    });
  } else {
    throw ConfigError("symmetry: geometry must be ball or halfspace");
  }
}

// --- DtN --------------------------------------------------------------------

void suite_dtn(Runner& R, Kind geom, int n) {
  ModelGeometry g(geom, n);
  std::uniform_int_distribution<int> co(-5, 5);
  if (geom == Kind::UpperHalfSpace) {
    R.run("dtn_symbolic_halfspace", "dtn-identity", 0, [&](CheckRecord& c) {
      std::size_t bad = 0;
      for (auto& p : dtn_symbolic_halfspace()) bad += p.size();
      exact_count(c, bad, "B3 - 3tB2, B4 - 8t^3 B1, B5 - (8/3)t^5 B0 over Q(a, b, c, t)");
    });
    R.run("dtn_frequencies_n" + std::to_string(n), "dtn-identity", 0, [&](CheckRecord& c) {
      std::size_t bad = 0;
      for (Rational t : {rat(1, 2), rat(1), rat(3)})
        if (!dtn_verify(g, ModeIndex::frequency(t), {co(R.rng), co(R.rng), co(R.rng)}).pass) ++bad;
      exact_count(c, bad, "t in {1/2, 1, 3}, random data");
    });
  } else {
    R.run("dtn_exact_" + kind_name(geom) + "_n" + std::to_string(n), "dtn-identity", 0, [&](CheckRecord& c) {
      std::size_t bad = 0;
      for (int l = 0; l <= R.cfg.lmax; ++l)
        if (!dtn_verify(g, ModeIndex::harmonic(l), {co(R.rng), co(R.rng), co(R.rng)}).pass) ++bad;
      exact_count(c, bad, "l = 0..lmax, random data, failing modes");
    });
  }
  if (geom == Kind::RoundHemisphere) {
    R.run("dtn_collocated_hemisphere_n" + std::to_string(n), "dtn-identity", 1e-8, [&](CheckRecord& c) {
      double worst = 0;
      for (int l = 0; l <= R.cfg.lmax; ++l) {
        BoundaryTriple<double> d{R.uniform(-1, 1), R.uniform(-1, 1), R.uniform(-1, 1)};
        worst = std::max(worst, dtn_verify_collocated(n, l, d).residual);
      }
      numeric(c, worst, "Chebyshev collocation per factor, relative residual");
    });
    R.run("einstein_factorization_n" + std::to_string(n), "einstein-factorization", 0, [&](CheckRecord& c) {
      Rational lhs = apply_L6_constant(g, 1), rhs = Rational(n - 5) / 2 * q6_constant_curvature(n + 1);
      c.exact = true;
      c.residual = to_string(Rational(lhs - rhs));
      c.pass = lhs == rhs;
      c.detail = "L6(1) = " + to_string(lhs);
    });
  }
  if (geom != Kind::UpperHalfSpace) {
    CsvSeries s;
    s.header = {"ell", "P1", "P3", "P5"};
    for (int l = 0; l <= R.cfg.lmax; ++l) {
      std::vector<std::string> row{std::to_string(l)};
      for (int k : {1, 3, 5}) row.push_back(to_string(rising(rat(2 * l + n - k, 2), k)));
      s.rows.push_back(row);
    }
    R.rep.series["multiplier_table"] = s;
  }
}

// --- trace ------------------------------------------------------------------

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// sphere-side center of the half-space bubble (eps, x0 = c e1)
double zeta_norm(double eps, double c) { return std::hypot(2 * c, 1 - eps - c * c) / (1 + eps + c * c); }

TraceConfig trace_cfg(const RunConfig& cfg) {
  TraceConfig t;
  t.lmax = cfg.lmax;
  t.nq = cfg.grid;
  t.tol = cfg.tol;
  return t;
}

void suite_trace(Runner& R, Kind geom, int n) {
  using S = ExtremalSpec;
  TraceConfig tc = trace_cfg(R.cfg);
  std::string gname = kind_name(geom);
  R.run("sharp_constant_equality_n" + std::to_string(n), "sobolev-trace", 0, [&](CheckRecord& c) {
    std::size_t bad = 0;
    for (int k : {1, 3, 5})
      if (!constant_equality(n, rat(k, 2)).equal) ++bad;
    exact_count(c, bad, "w = 1: Gamma ratio and Vol exponents, gamma in {1/2, 3/2, 5/2}");
  });
  CsvSeries gaps;
  gaps.header = {"epsilon", "center", "relative_gap"};
  for (double eps : {0.5, 1.0, 2.0}) {
    R.run("extremal_" + gname + "_eps" + short_num(eps), "sobolev-trace", R.cfg.tol, [&](CheckRecord& c) {
      double cx = 0.5;
      std::array<S, 3> sp;
      for (int i = 0; i < 3; ++i) {
        double off = cx * (i == 1 ? -1 : 1);
        double ctr = geom == Kind::UpperHalfSpace ? off : (off >= 0 ? 1 : -1) * zeta_norm(eps, off);
        sp[i] = S{S::Shape::PowerBubble, 1.0 - 0.4 * i, ctr, eps};
      }
      InequalityReport r = corollary_check(geom, n, sp, tc);
      numeric(c, std::abs(r.relative_gap), r.report.detail);
      c.pass = r.report.pass;
      gaps.rows.push_back({decimal(eps), decimal(cx), decimal(r.relative_gap)});
    });
  }
  R.rep.series["gap_vs_epsilon"] = gaps;
  R.run("non_extremal_" + gname, "sobolev-trace", 0, [&](CheckRecord& c) {
    std::size_t bad = 0;
    double worst = 1;
    for (int k = 0; k < 20; ++k) {
      std::array<SlotField, 3> f;
      for (int i = 0; i < 3; ++i) {
        double w = slot_weight(n, i).get_d(), a = R.uniform(0.3, 0.6) * (k % 2 ? 1 : -1), d = R.uniform(0.1, 0.4);
        if (geom == Kind::UpperHalfSpace) {
          f[i] = halfspace_radial_field(n, i, [=](double r) {
            double q = 1 + r * r;
            return std::pow(q, -w) * (1 + d * r * r / q);
          });
        } else {
          f[i].sphere = [=](double t) { return std::pow(1 + a * t, -w) + d * t * t; };
        }
      }
      InequalityReport r = corollary_check(geom, n, f, tc);
      worst = std::min(worst, r.relative_gap);
      if (!(r.relative_gap > 0) || !r.report.pass) ++bad;
    }
    exact_count(c, bad, "20 random non-extremal inputs, non-positive gaps; smallest relative gap " + decimal(worst));
  });
}

void suite_critical(Runner& R, Kind geom) {
  using S = ExtremalSpec;
  TraceConfig tc = trace_cfg(R.cfg);
  tc.tol = std::max(R.cfg.tol, 1e-6);
  std::string gname = kind_name(geom);
  R.run("critical_constant_" + gname, "onofri-trace", 1e-10, [&](CheckRecord& c) {
    std::array<SlotField, 3> f;
    f[0].sphere = [](double) { return 1.5; };
    f[0].flat = [](double, double) { return 1.5; };
    f[1].sphere = f[2].sphere = [](double) { return 0.0; };
    f[1].flat = f[2].flat = [](double, double) { return 0.0; };
    InequalityReport r = critical_check(geom, f, tc);
    numeric(c, std::max(std::abs(r.lhs), std::abs(r.rhs)), "f constant, phi = psi = 0");
  });
  for (double x1 : {0.0, 0.3}) {
    R.run("critical_extremal_" + gname + "_x" + short_num(x1), "onofri-trace", 1e-5, [&](CheckRecord& c) {
      std::array<S, 3> sp{S{S::Shape::LogBubble, 0.2, x1, 0.8}, S{S::Shape::PowerBubble, 1, 0, 1},
                          S{S::Shape::PowerBubble, -0.5, geom == Kind::RoundHemisphere ? 0 : -0.2, 1.3}};
      InequalityReport r = critical_check(geom, sp, tc);
      numeric(c, std::abs(r.gap), r.report.detail);
    });
  }
  if (geom == Kind::RoundHemisphere) {
    R.run("critical_factorized_residual", "onofri-trace", 1e-8, [&](CheckRecord& c) {
      std::array<S, 3> sp{S{S::Shape::LogBubble, 0.2, 0, 1}, S{S::Shape::PowerBubble, 1, 0, 1},
                          S{S::Shape::PowerBubble, 1, 0, 1}};
      std::array<SlotField, 3> f;
      for (int i = 0; i < 3; ++i) f[i] = extremal_field(geom, 5, i, sp[i]);
      numeric(c, hemisphere_critical_residual(f, std::min(R.cfg.lmax, 16), R.cfg.grid),
              "(-Lap + 6)(-Lap + 4)(-Lap) u, weak form");
    });
  }
  R.run("critical_non_extremal_" + gname, "onofri-trace", 0, [&](CheckRecord& c) {
    std::size_t bad = 0;
    for (int k = 0; k < 10; ++k) {
      double a = R.uniform(-0.3, 0.3), d = R.uniform(0.1, 0.3);
      std::array<SlotField, 3> f;
      if (geom == Kind::UpperHalfSpace) {
        // bounded at infinity: the flat f slot carries no log term here
        f[0] = halfspace_radial_field(5, 0, [=](double r) {
          double q = r * r / (1 + r * r);
          return d * q + 2 * a * q * q;
        });
        f[1] = halfspace_radial_field(5, 1, [](double r) { return 1 / (1 + r * r); });
        f[2] = halfspace_radial_field(5, 2, [](double r) { return std::pow(1 + r * r, -2); });
      } else {
        f[0].sphere = [=](double t) { return -std::log(1 + a * t) + d * t * t; };
        f[1].sphere = [](double) { return 1.0; };
        f[2].sphere = [](double) { return 1.0; };
      }
      InequalityReport r = critical_check(geom, f, tc);
      if (!(r.gap > 0)) ++bad;
    }
    exact_count(c, bad, "10 random non-extremal f, non-positive gaps");
  });
}

}  // namespace

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void validate(const RunConfig& c) {
  static const std::vector<std::string> suites{"covariance", "symmetry", "dtn", "trace", "critical", "all"};
  if (std::find(suites.begin(), suites.end(), c.suite) == suites.end()) throw ConfigError("unknown suite: " + c.suite);
  if (c.n < 5) throw ConfigError("n must be >= 5");
  if (c.suite == "critical" && c.n != 5) throw ConfigError("suite critical requires n = 5");
  if (c.suite == "trace" && c.n < 6) throw ConfigError("suite trace requires n >= 6 (n = 5 is the critical suite)");
  if (!(c.tol > 0)) throw ConfigError("tolerance must be positive");
  if (c.lmax < 2) throw ConfigError("lmax must be >= 2");
  if (c.grid < 16) throw ConfigError("grid must be >= 16");
  std::string g = c.geometry;
  if (g.empty()) return;
  try {
    parse_kind(g);
  } catch (const std::exception&) {
    throw ConfigError("unknown geometry: " + g);
  }
  if (c.suite == "covariance" && parse_kind(g) != Kind::UpperHalfSpace)
    throw ConfigError("covariance probes run on the half-space only");
  if (c.suite == "symmetry" && g != "ball" && parse_kind(g) != Kind::UpperHalfSpace)
    throw ConfigError("symmetry: geometry must be ball or halfspace");
  if ((c.suite == "trace" || c.suite == "critical") && !is_trace_geom(g))
    throw ConfigError(c.suite + ": geometry must be halfspace, ball or hemisphere");
}

int SuiteReport::passed() const {
  int k = 0;
  for (auto& c : checks) k += c.pass;
  return k;
}

int SuiteReport::failed() const { return int(checks.size()) - passed(); }

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["config"] = {{"suite", config.suite}, {"geometry", config.geometry.empty() ? "default" : config.geometry},
                 {"n", config.n},         {"lmax", config.lmax},
                 {"grid", config.grid},   {"tolerance", decimal(config.tol)},
                 {"seed", config.seed}};
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : checks) {
    nlohmann::ordered_json r{{"id", c.id},
                             {"tag", c.tag},
                             {"status", c.pass ? "pass" : "fail"},
                             {"residual", c.residual},
                             {"tolerance", decimal(c.tolerance)},
                             {"exact", c.exact}};
    if (config.timing) r["runtime_ms"] = decimal(c.runtime_ms);
    if (!c.detail.empty()) r["detail"] = c.detail;
    j["checks"].push_back(r);
  }
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j;
}

SuiteReport run_suite(const RunConfig& cfg) {
  validate(cfg);
  SuiteReport rep;
  rep.config = cfg;
  Runner R(cfg, rep);
  int n = cfg.n;
  std::string g = cfg.geometry.empty() ? default_geometry(cfg.suite) : cfg.geometry;
  if (cfg.suite == "covariance") suite_covariance(R, n);
  if (cfg.suite == "symmetry") suite_symmetry(R, parse_kind(g), n);
  if (cfg.suite == "dtn") suite_dtn(R, parse_kind(g), n);
  if (cfg.suite == "trace") suite_trace(R, parse_kind(g), n);
  if (cfg.suite == "critical") {
    suite_critical(R, parse_kind(g));
    suite_T_shift(R);
  }
  if (cfg.suite == "all") {
    suite_covariance(R, n);
    suite_symmetry(R, Kind::EuclideanBall, n);
    suite_symmetry(R, Kind::UpperHalfSpace, n);
    for (Kind k : {Kind::UpperHalfSpace, Kind::EuclideanBall, Kind::RoundHemisphere, Kind::HyperbolicGeodesic})
      suite_dtn(R, k, n);
    for (Kind k : {Kind::UpperHalfSpace, Kind::EuclideanBall, Kind::RoundHemisphere}) {
      if (n == 5)
        suite_critical(R, k);
      else
        suite_trace(R, k, n);
    }
  }
  return rep;
}

void write_report(const SuiteReport& r, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << r.to_json().dump(2) << "\n";
  if (!os) throw std::runtime_error("write failed: " + path);
}

void emit_csv(const SuiteReport& r, const std::string& what, std::ostream& os) {
  if (what.empty()) throw std::invalid_argument("emit_csv: empty series request");
  auto it = r.series.find(what);
  if (it == r.series.end() || it->second.rows.empty())
    throw std::invalid_argument("emit_csv: report has no series '" + what + "'");
  auto line = [&](const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "\n";
  };
  line(it->second.header);
  for (auto& row : it->second.rows) line(row);
}

}  // namespace gjms6
