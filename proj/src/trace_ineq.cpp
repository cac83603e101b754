#include "gjms6/trace_ineq.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "gjms6/energy_form.hpp"
#include "gjms6/mode_solver.hpp"
#include "gjms6/quadrature.hpp"

namespace gjms6 {

double sphere_volume(int n) {
  double h = (n + 1) / 2.0;
  return 2 * std::pow(M_PI, h) / boost::math::tgamma(h);
}

double SharpConstant::value() const {
  return coeff.get_d() * std::pow(sphere_volume(n), vol_power.get_d());
}

SharpConstant sharp_constant(int n, const Rational& gamma) {
  Rational two_g = 2 * gamma;
  if (gamma <= 0 || two_g.get_den() != 1)
    throw std::invalid_argument("sharp_constant: need 2 gamma a positive integer");
  if (two_g >= n) throw std::domain_error("sharp_constant: gamma >= n/2 is critical, use the Onofri branch");
  SharpConstant c;
  c.n = n;
  c.gamma = gamma;
  c.coeff = rising((Rational(n) - two_g) / 2, int(two_g.get_num().get_si()));
  c.vol_power = two_g / n;
  return c;
}

ExactEquality constant_equality(int n, const Rational& gamma) {
  SharpConstant c = sharp_constant(n, gamma);
  ExactEquality e;
  e.lhs_coeff = multiplier(Boundary::Round, n, gamma, ModeIndex::harmonic(0));
  e.lhs_vol_power = 1;
  e.rhs_coeff = c.coeff;
  // (oint 1)^{2/p} with p = 2n / (n - 2 gamma)
  e.rhs_vol_power = c.vol_power + (Rational(n) - 2 * gamma) / n;
  e.equal = e.lhs_coeff == e.rhs_coeff && e.lhs_vol_power == e.rhs_vol_power;
  return e;
}

namespace {

// theta rule on [0, pi] with the S^n measure folded in
struct SphereRule {
  std::vector<double> t, w;
};

SphereRule sphere_rule(int n, int nq) {
  QuadRule q = gauss_legendre(nq, 0, M_PI);
  SphereRule r;
  double vol = sphere_volume(n - 1);
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    r.t.push_back(std::cos(q.x[i]));
    r.w.push_back(vol * q.w[i] * std::pow(std::sin(q.x[i]), n - 1));
  }
  return r;
}

double lp_norm_sq_sphere(int n, const std::function<double(double)>& w, double p, int nq) {
  double s = zonal_integral(n, [&](double t) { return std::pow(std::abs(w(t)), p); }, nq);
  return std::pow(s, 2 / p);
}

// int_{R^n} F(x.e1, |x|) dx, x = r (cos a e1 + sin a e'), r = scale tan(th/2)
double flat_integral(int n, const std::function<double(double, double)>& F, double scale, int nq) {
  QuadRule qt = gauss_legendre(nq, 0, M_PI), qa = gauss_legendre(nq / 2, 0, M_PI);
  double vol = sphere_volume(n - 2), s = 0;
  for (std::size_t i = 0; i < qt.x.size(); ++i) {
    double h = qt.x[i] / 2, r = scale * std::tan(h);
    double jac = scale / (2 * std::cos(h) * std::cos(h)) * std::pow(r, n - 1);
    double inner = 0;
    for (std::size_t j = 0; j < qa.x.size(); ++j)
      inner += qa.w[j] * std::pow(std::sin(qa.x[j]), n - 2) * F(r * std::cos(qa.x[j]), r);
    s += qt.w[i] * jac * inner;
  }
  return vol * s;
}

double lp_norm_sq_flat(int n, const SlotField& f, double p, int nq) {
  double s = flat_integral(n, [&](double a, double r) { return std::pow(std::abs(f.flat(a, r)), p); }, f.flat_scale, nq);
  return std::pow(s, 2 / p);
}

double slot_factor(int slot) { return slot == 0 ? 8.0 / 3.0 : (slot == 1 ? 8.0 : 3.0); }

Rational slot_gamma(int slot) { return rat(5 - 2 * slot, 2); }

struct SlotEnergy {
  double value = 0, tail = 0;
  ZonalExpansion z;
};

SlotEnergy slot_energy(int n, int slot, const std::function<double(double)>& w, const TraceConfig& cfg) {
  SlotEnergy e;
  e.z = zonal_expand(n, w, cfg.lmax, cfg.nq);
  double last = 0;
  for (int l = 0; l <= cfg.lmax; ++l) {
    double m = dtn_constants(Boundary::Round, n, ModeIndex::harmonic(l))[slot].get_d();
    e.value += m * e.z.energy[l];
    if (l >= cfg.lmax - 1) last += m * e.z.energy[l];
  }
  // l2 in the scale keeps the guard meaningful when the energy vanishes (constants)
  double scale = std::abs(e.value) + e.z.l2_sq + 1e-300;
  e.tail = last / scale;
  double raw = std::abs(e.z.tail) / (e.z.l2_sq + 1e-300);
  if (e.tail > cfg.tail_tol || raw > 1e-8) {
    std::ostringstream os;
    os << "under-resolved zonal expansion (slot " << slot << ", weighted tail " << e.tail << ", l2 tail " << raw
       << "); raise lmax or widen the bubble";
    throw std::domain_error(os.str());
  }
  return e;
}

// 3x3 display Gram per mode: E(c) = c^T G c per unit oint Y^2
using Gram = std::array<std::array<double, 3>, 3>;

Gram display_gram(Kind geom, int n, int ell) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, Gram> cache;
  auto key = std::make_tuple(int(geom), n, ell);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto E = [&](int i, int j) {
    if (geom == Kind::EuclideanBall) {
      Triple d;
      d[i] += 1;
      d[j] += 1;
      return ball_display_energy(n, ell, d).get_d();
    }
    BoundaryTriple<double> d;
    d[i] += 1;
    d[j] += 1;
    return hemisphere_display_energy(n, ell, d);
  };
  Gram G{};
  // E(e_i + e_i) = 4 G_ii
  for (int i = 0; i < 3; ++i) G[i][i] = E(i, i) / 4;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) G[i][j] = G[j][i] = (E(i, j) - G[i][i] - G[j][j]) / 2;
  std::lock_guard<std::mutex> lk(mu);
  cache[key] = G;
  return G;
}

double display_energy(Kind geom, int n, const std::array<ZonalExpansion, 3>& z, int lmax) {
  double s = 0;
  for (int l = 0; l <= lmax; ++l) {
    Gram G = display_gram(geom, n, l);
    double q = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) q += G[i][j] * z[i].coeff[l] * z[j].coeff[l];
    s += q * z[0].norm[l];
  }
  return s;
}

void check_geom(Kind geom) {
  if (geom != Kind::UpperHalfSpace && geom != Kind::EuclideanBall && geom != Kind::RoundHemisphere)
    throw std::invalid_argument("trace check: geometry must be upper, ball or hemisphere");
}

void finish(InequalityReport& r, const std::string& name, double tol, bool extremal) {
  r.gap = r.lhs - r.rhs;
  double scale = std::max({std::abs(r.lhs), std::abs(r.rhs), 1e-300});
  r.relative_gap = r.gap / scale;
  double route = r.has_display ? std::abs(r.lhs - r.lhs_display) / scale : 0;
  r.report.name = name;
  r.report.residual = extremal ? std::abs(r.relative_gap) : std::max(0.0, -r.relative_gap);
  r.report.pass = r.report.residual <= tol && route <= 1e-8;
  std::ostringstream os;
  os.precision(12);
  os << "lhs=" << r.lhs << " rhs=" << r.rhs << " rel_gap=" << r.relative_gap;
  if (r.has_display) os << " display_route_dev=" << route;
  r.report.detail = os.str();
}

std::array<SlotField, 3> fields_of(Kind geom, int n, const std::array<ExtremalSpec, 3>& specs) {
  std::array<SlotField, 3> f;
  for (int i = 0; i < 3; ++i) f[i] = extremal_field(geom, n, i, specs[i]);
  return f;
}

InequalityReport evaluate(Kind geom, int n, const std::array<SlotField, 3>& slots, const TraceConfig& cfg) {
  check_geom(geom);
  InequalityReport r;
  std::array<ZonalExpansion, 3> z;
  for (int i = 0; i < 3; ++i) {
    if (!slots[i].sphere) throw std::invalid_argument("trace check: slot without sphere profile");
    SlotEnergy e = slot_energy(n, i, slots[i].sphere, cfg);
    r.lhs_slots[i] = e.value;
    r.tail = std::max(r.tail, e.tail);
    r.lhs += e.value;
    z[i] = std::move(e.z);
  }
  double volS = sphere_volume(n);
  for (int i = 0; i < 3; ++i) {
    if (n == 5 && i == 0) {
      // Onofri slot: (128/5) Vol(S^5) ln oint e^{5 (f - fbar)} dmu
      double lg;
      if (geom == Kind::UpperHalfSpace) {
        if (!slots[0].flat) throw std::invalid_argument("critical check: half-space slot needs a flat profile");
        auto dmu = [&](double rr) { return std::pow((1 + rr * rr) / 2, -5) / volS; };
        const SlotField& f = slots[0];
        double mass = flat_integral(5, [&](double, double rr) { return dmu(rr); }, f.flat_scale, cfg.nq);
        double fbar = flat_integral(5, [&](double a, double rr) { return f.flat(a, rr) * dmu(rr); }, f.flat_scale, cfg.nq) / mass;
        lg = std::log(flat_integral(5, [&](double a, double rr) { return std::exp(5 * (f.flat(a, rr) - fbar)) * dmu(rr); },
                                    f.flat_scale, cfg.nq));
      } else {
        const auto& w = slots[0].sphere;
        double fbar = zonal_integral(5, w, cfg.nq) / volS;
        lg = std::log(zonal_integral(5, [&](double t) { return std::exp(5 * (w(t) - fbar)); }, cfg.nq) / volS);
      }
      r.rhs_slots[0] = 128.0 / 5.0 * volS * lg;
    } else {
      SharpConstant c = sharp_constant(n, slot_gamma(i));
      double p = 2.0 * n / (n - 2 * slot_gamma(i).get_d());
      double nrm;
      if (geom == Kind::UpperHalfSpace) {
        if (!slots[i].flat) throw std::invalid_argument("trace check: half-space slot needs a flat profile");
        nrm = lp_norm_sq_flat(n, slots[i], p, cfg.nq);
      } else {
        nrm = lp_norm_sq_sphere(n, slots[i].sphere, p, cfg.nq);
      }
      r.rhs_slots[i] = slot_factor(i) * c.value() * nrm;
    }
    r.rhs += r.rhs_slots[i];
  }
  r.lhs_display = r.lhs;
  if (geom != Kind::UpperHalfSpace) {
    r.has_display = true;
    r.lhs_display = display_energy(geom, n, z, cfg.lmax);
  }
  return r;
}

}  // namespace

ZonalExpansion zonal_expand(int n, const std::function<double(double)>& w, int lmax, int nq) {
  SphereRule q = sphere_rule(n, nq);
  double alpha = (n - 1) / 2.0;
  ZonalExpansion z;
  z.n = n;
  std::vector<double> wv(q.t.size());
  for (std::size_t i = 0; i < q.t.size(); ++i) {
    wv[i] = w(q.t[i]);
    z.l2_sq += q.w[i] * wv[i] * wv[i];
  }
  double sum = 0;
  for (int l = 0; l <= lmax; ++l) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < q.t.size(); ++i) {
      double c = boost::math::gegenbauer(unsigned(l), alpha, q.t[i]);
      num += q.w[i] * wv[i] * c;
      den += q.w[i] * c * c;
    }
    z.coeff.push_back(num / den);
    z.norm.push_back(den);
    z.energy.push_back(num * num / den);
    sum += z.energy.back();
  }
  z.tail = z.l2_sq - sum;
  return z;
}

double zonal_integral(int n, const std::function<double(double)>& F, int nq) {
  SphereRule q = sphere_rule(n, nq);
  double s = 0;
  for (std::size_t i = 0; i < q.t.size(); ++i) s += q.w[i] * F(q.t[i]);
  return s;
}

InequalityReport sphere_sobolev_check(int n, const Rational& gamma, const std::function<double(double)>& w,
                                      const TraceConfig& cfg) {
  SharpConstant c = sharp_constant(n, gamma);
  ZonalExpansion z = zonal_expand(n, w, cfg.lmax, cfg.nq);
  InequalityReport r;
  double last = 0;
  for (int l = 0; l <= cfg.lmax; ++l) {
    double m = multiplier(Boundary::Round, n, gamma, ModeIndex::harmonic(l)).get_d();
    r.lhs += m * z.energy[l];
    if (l >= cfg.lmax - 1) last += m * z.energy[l];
  }
  r.tail = last / (std::abs(r.lhs) + z.l2_sq + 1e-300);
  if (r.tail > cfg.tail_tol || std::abs(z.tail) > 1e-8 * (z.l2_sq + 1e-300))
    throw std::domain_error("sphere_sobolev_check: under-resolved zonal expansion");
  double p = 2.0 * n / (n - 2 * gamma.get_d());
  r.rhs = c.value() * lp_norm_sq_sphere(n, w, p, cfg.nq);
  r.lhs_display = r.lhs;
  r.lhs_slots = {r.lhs, 0, 0};
  r.rhs_slots = {r.rhs, 0, 0};
  finish(r, "sphere_sobolev", cfg.tol, true);
  return r;
}

Rational slot_weight(int n, int slot) { return Rational(n - 5 + 2 * slot) / 2; }

SlotField extremal_field(Kind geom, int n, int slot, const ExtremalSpec& s) {
  check_geom(geom);
  bool log = s.kind == ExtremalSpec::Shape::LogBubble;
  if (log && (slot != 0 || n != 5)) throw std::invalid_argument("log bubble only in slot f with n = 5");
  if (!log && n == 5 && slot == 0) throw std::invalid_argument("n = 5 slot f takes a log bubble");
  double w = slot_weight(n, slot).get_d(), a = s.a, c = s.center, eps = s.eps;
  SlotField f;
  if (geom != Kind::UpperHalfSpace) {
    if (std::abs(c) >= 1) throw std::domain_error("bubble center must satisfy |x0| < 1");
    if (log)
      f.sphere = [=](double t) { return a - std::log(1 + c * t); };
    else
      f.sphere = [=](double t) { return a * std::pow(1 + c * t, -w); };
    return f;
  }
  if (eps <= 0) throw std::domain_error("bubble scale must be positive");
  // eps + |x - x0|^2 = ((1 + |x|^2)/2) A (1 + xi.zeta) under stereographic projection
  double A = 1 + eps + c * c;
  double zeta = std::hypot(2 * c, 1 - eps - c * c) / A;
  f.flat_scale = std::sqrt(eps + c * c);
  if (log) {
    f.flat = [=](double x1, double r) { return a - std::log(eps + r * r - 2 * c * x1 + c * c) + std::log(1 + r * r); };
    f.sphere = [=](double t) { return a - std::log(A / 2) - std::log(1 + zeta * t); };
  } else {
    f.flat = [=](double x1, double r) { return a * std::pow(eps + r * r - 2 * c * x1 + c * c, -w); };
    f.sphere = [=](double t) { return a * std::pow(A * (1 + zeta * t), -w); };
  }
  return f;
}

SlotField halfspace_radial_field(int n, int slot, std::function<double(double)> g) {
  double w = slot_weight(n, slot).get_d();
  SlotField f;
  f.flat = [g](double, double r) { return g(r); };
  // t = xi_n = (r^2 - 1)/(r^2 + 1); (1 + r^2)/2 = 1/(1 - t)
  f.sphere = [g, w](double t) { return std::pow(1 - t, -w) * g(std::sqrt((1 + t) / (1 - t))); };
  return f;
}

InequalityReport corollary_check(Kind geom, int n, const std::array<SlotField, 3>& slots, const TraceConfig& cfg) {
  if (n < 6) throw std::domain_error("corollary_check: n >= 6 (n = 5 is the critical check)");
  InequalityReport r = evaluate(geom, n, slots, cfg);
  if (r.has_display) std::swap(r.lhs, r.lhs_display);  // the display is the corollary's own left side
  finish(r, "trace_" + kind_name(geom), cfg.tol, false);
  return r;
}

InequalityReport corollary_check(Kind geom, int n, const std::array<ExtremalSpec, 3>& specs, const TraceConfig& cfg) {
  if (n < 6) throw std::domain_error("corollary_check: n >= 6 (n = 5 is the critical check)");
  InequalityReport r = evaluate(geom, n, fields_of(geom, n, specs), cfg);
  if (r.has_display) std::swap(r.lhs, r.lhs_display);
  finish(r, "trace_" + kind_name(geom), cfg.tol, true);
  return r;
}

InequalityReport critical_check(Kind geom, const std::array<SlotField, 3>& slots, const TraceConfig& cfg) {
  InequalityReport r = evaluate(geom, 5, slots, cfg);
  if (r.has_display) std::swap(r.lhs, r.lhs_display);
  finish(r, "critical_" + kind_name(geom), cfg.tol, false);
  return r;
}

InequalityReport critical_check(Kind geom, const std::array<ExtremalSpec, 3>& specs, const TraceConfig& cfg) {
  InequalityReport r = evaluate(geom, 5, fields_of(geom, 5, specs), cfg);
  if (r.has_display) std::swap(r.lhs, r.lhs_display);
  finish(r, "critical_" + kind_name(geom), cfg.tol, true);
  return r;
}

double hemisphere_critical_residual(const std::array<SlotField, 3>& slots, int lmax, int nq) {
  std::array<ZonalExpansion, 3> z;
  for (int i = 0; i < 3; ++i) z[i] = zonal_expand(5, slots[i].sphere, lmax, nq);
  double worst = 0;
  for (int l = 0; l <= lmax; ++l) {
    BoundaryTriple<double> d{z[0].coeff[l], z[1].coeff[l], z[2].coeff[l]};
    double s = std::max({std::abs(d.f), std::abs(d.phi), std::abs(d.psi)});
    if (s == 0) continue;
    d = {d.f / s, d.phi / s, d.psi / s};
    HemisphereSolveResult h = hemisphere_mode_solve(5, l, d);
    worst = std::max(worst, factorized_weak_residual(h.profile));
  }
  return worst;
}

}  // namespace gjms6
