#include "gjms6/conformal.hpp"

#include <cmath>
#include <stdexcept>

#include "gjms6/bformulas.hpp"
#include "gjms6/boundary_ops.hpp"
#include "gjms6/conf_ctx.hpp"
#include "gjms6/trace_ineq.hpp"
#include "gjms6/warped.hpp"

namespace gjms6 {

namespace {

void require_halfspace(const ModelGeometry& g, const char* who) {
  if (g.kind != Kind::UpperHalfSpace)
    throw std::invalid_argument(std::string(who) + ": unsupported geometry (half-space probes only)");
}

void require_order(int order, int j) {
  if (order < 6 || order < j + 1) throw std::domain_error("covariance probe: truncation too shallow (order >= 6)");
}

}  // namespace

EField infinitesimal_covariance_residual(int j, const VariationProbe& p, const MultiPoly& u, const ModelGeometry& g,
                                         bool printed_b4) {
  require_halfspace(g, "infinitesimal_covariance_residual");
  require_order(p.order, j);
  int n = g.n;
  if (p.w != -rat(n - 5, 2)) throw std::invalid_argument("infinitesimal_covariance_residual: weight must be -(n-5)/2");
  auto alg = ExpAlgebra::make(p.sigma, kProbeY, p.order, kProbeEps);
  ConfCtx flat(alg, n, {0, 1}, false), conf(alg, n, {0, 1}, true);
  BoundaryFormulas<ConfCtx> bf(flat, n), bc(conf, n);
  bf.printed_b4 = bc.printed_b4 = printed_b4;
  EField varied = conf.expw_bdry(-(p.w - j)) * bc.apply(j, conf.weighted(p.w, u));
  EField r = varied - bf.apply(j, flat.field(u));
  return r.eps_part(1);
}

EField finite_covariance_residual(int j, const MultiPoly& sigma, const MultiPoly& u, const ModelGeometry& g,
                                  int order, bool printed_b4) {
  require_halfspace(g, "finite_covariance_residual");
  require_order(order, j);
  int n = g.n;
  auto alg = ExpAlgebra::make(sigma, kProbeY, order);
  ConfCtx flat(alg, n, {0, 1}, false), conf(alg, n, {0, 1}, true);
  BoundaryFormulas<ConfCtx> bf(flat, n), bc(conf, n);
  bf.printed_b4 = bc.printed_b4 = printed_b4;
  Rational w = rat(n - 5, 2);
  EField lhs = bc.apply(j, conf.field(u));
  EField rhs = conf.expw_bdry(-rat(n + 2 * j - 5, 2)) * bf.apply(j, flat.weighted(w, u));
  return lhs - rhs;
}

EField critical_T_shift(int j, const MultiPoly& sigma, const ModelGeometry& g, int order) {
  if (g.n != 5) throw std::invalid_argument("critical_T_shift: n must be 5");
  if (j < 1 || j > 5) throw std::out_of_range("critical_T_shift: j in 1..5");
  require_halfspace(g, "critical_T_shift");
  require_order(order, j);
  auto alg = ExpAlgebra::make(sigma, kProbeY, order);
  ConfCtx flat(alg, 5, {0, 1}, false), conf(alg, 5, {0, 1}, true);
  BoundaryFormulas<ConfCtx> bf(flat, 5), bc(conf, 5);
  return conf.expw_bdry(j) * bc.T(j) - bf.T(j) - bf.apply(j, flat.field(sigma));
}

Point stereo_to_sphere(const Point& x) {
  double r2 = 0;
  for (double v : x) r2 += v * v;
  Point xi;
  for (double v : x) xi.push_back(2 * v / (1 + r2));
  xi.push_back((r2 - 1) / (r2 + 1));
  return xi;
}

Point sphere_to_stereo(const Point& xi) {
  double last = xi.back();
  if (last >= 1) throw std::domain_error("sphere_to_stereo: north pole has no image");
  Point x;
  for (std::size_t i = 0; i + 1 < xi.size(); ++i) x.push_back(xi[i] / (1 - last));
  return x;
}

BoundaryFn cayley_transport(const BoundaryFn& f, const Rational& weight, Transport dir) {
  double w = weight.get_d();
  switch (dir) {
    case Transport::SphereToFlat:
      return [f, w](const Point& x) {
        double r2 = 0;
        for (double v : x) r2 += v * v;
        return std::pow(2 / (1 + r2), w) * f(stereo_to_sphere(x));
      };
    case Transport::FlatToSphere:
      return [f, w](const Point& xi) {
        Point x = sphere_to_stereo(xi);
        double r2 = 0;
        for (double v : x) r2 += v * v;
        return std::pow((1 + r2) / 2, w) * f(x);
      };
    case Transport::HemisphereToBall:
    case Transport::BallToHemisphere:
      return f;
  }
  throw std::invalid_argument("cayley_transport: unknown direction");
}

BoundaryTriple<BoundaryFn> cayley_transport(const BoundaryTriple<BoundaryFn>& d, int n, Transport dir) {
  BoundaryTriple<BoundaryFn> out;
  for (int i = 0; i < 3; ++i) out[i] = cayley_transport(d[i], slot_weight(n, i), dir);
  return out;
}

double round_measure_density(const Point& x, int n) {
  double r2 = 0;
  for (double v : x) r2 += v * v;
  return std::pow((1 + r2) / 2, -n) / sphere_volume(n);
}

Rational BoundaryJet::eta_derivative(int k) const {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return (k % 2 ? -f : f) * c.at(k);
}

namespace {

constexpr int kJetK = 14;

// B_j of the s-profile with coefficients c (l = 0 mode); adds T_j when n = 5
Rational jet_B(const WarpedGeometry& w, int j, const std::vector<Rational>& c) {
  Series<Rational> F = Series<Rational>::from_coeffs(kJetK, c);
  WarpedModeCtx<Rational> ctx(w, Rational(0));
  BoundaryFormulas<WarpedModeCtx<Rational>> bf(ctx, w.n);
  Rational v = bf.apply(j, ctx.mode(F)).v;
  if (w.n == 5 && j > 0) v += bf.T(j).v;
  return v;
}

}  // namespace

BoundaryJet normalize_jet(const ModelGeometry& g) {
  WarpedGeometry w = warped_model(g, kJetK);
  BoundaryJet jet;
  jet.c.assign(6, Rational(0));
  jet.c[0] = g.n == 5 ? 0 : 1;
  // B_j has normal order j, so c_j enters linearly and alone at step j
  for (int j = 1; j <= 5; ++j) {
    jet.c[j] = 0;
    Rational r0 = jet_B(w, j, jet.c);
    jet.c[j] = 1;
    Rational r1 = jet_B(w, j, jet.c);
    if (r1 == r0) throw std::logic_error("normalize_jet: B_j does not see the j-th normal derivative");
    jet.c[j] = -r0 / (r1 - r0);
  }
  return jet;
}

std::vector<Rational> normal_form_defect(const ModelGeometry& g, const BoundaryJet& jet) {
  WarpedGeometry w = warped_model(g, kJetK);
  std::vector<Rational> d;
  for (int j = 0; j <= 5; ++j) d.push_back(jet_B(w, j, jet.c) - (j == 0 && g.n != 5 ? 1 : 0));
  return d;
}

}  // namespace gjms6
