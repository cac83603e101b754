#include "gjms6/boundary_ops.hpp"

#include <stdexcept>

#include "gjms6/conf_ctx.hpp"

namespace gjms6 {

CurvatureCoefficients coefficients(const ModelGeometry& g) {
  WarpedGeometry w = warped_model(g);
  WarpedModeCtx<Rational> ctx(w, Rational(0));
  BoundaryFormulas<WarpedModeCtx<Rational>> bf(ctx, g.n);
  CurvatureCoefficients c;
  c.T1 = bf.T1().v;
  c.T2 = bf.T2().v;
  c.T3 = bf.T3().v;
  c.T4c = bf.T4().v;
  c.T5 = bf.T5().v;
  c.S2 = bf.S2().v;
  c.S3 = bf.S3().v;
  c.S4 = bf.S4().v;
  c.R13 = bf.R13().v;
  c.R23 = bf.R23().v;
  return c;
}

std::array<Rational, 2> bidegree(int j, int n) {
  if (j < 0 || j > 5) throw std::out_of_range("bidegree: j must be in 0..5");
  return {-rat(n - 5, 2), -rat(n + 2 * j - 5, 2)};
}

MultiPoly apply_B(int j, const ModelGeometry& g, const MultiPoly& u) {
  if (j < 0 || j > 5) throw std::out_of_range("apply_B: j must be in 0..5");
  switch (g.kind) {
    case Kind::UpperHalfSpace: {
      int y = g.n;
      auto alg = ExpAlgebra::make(MultiPoly(), y, std::max(6, u.degree(y) + 2));
      std::vector<int> tang;
      for (int i = 0; i < g.n; ++i)
        if (u.degree(i) > 0) tang.push_back(i);
      ConfCtx ctx(alg, g.n, tang, false);
      BoundaryFormulas<ConfCtx> bf(ctx, g.n);
      EField r = bf.apply(j, ctx.field(u));
      if (r.is_zero()) return MultiPoly();
      auto it = r.parts().find(Rational(0));
      if (r.parts().size() != 1 || it == r.parts().end()) throw std::logic_error("apply_B: unexpected weights");
      return it->second;
    }
    case Kind::EuclideanBall: {
      BallPolyCtx ctx(g.n);
      BoundaryFormulas<BallPolyCtx> bf(ctx, g.n);
      return bf.apply(j, u);
    }
    default: break;
  }
  throw std::invalid_argument("apply_B: polynomial fields need a flat model; use apply_B_mode");
}

MultiPoly apply_B(int j, const ModelGeometry& g, const ExpPolyMode& u) {
  if (g.kind != Kind::UpperHalfSpace) throw std::invalid_argument("apply_B: exponential modes live on the half-space");
  ExpModeCtx ctx(g.n);
  BoundaryFormulas<ExpModeCtx> bf(ctx, g.n);
  return bf.apply(j, u.profile);
}

namespace {

struct Builder {
  Stencil s;
  Builder& add(const Rational& c, Jet jet, int p = 0) {
    if (c != 0) s.push_back({c, p, jet});
    return *this;
  }
  // c (-Lapbar + a)(-Lapbar + b) applied to jet
  Builder& quad(const Rational& c, const Rational& a, const Rational& b, Jet jet) {
    add(c, jet, 2);
    add(-c * (a + b), jet, 1);
    add(c * a * b, jet, 0);
    return *this;
  }
  // c (-Lapbar + a) applied to jet
  Builder& lin(const Rational& c, const Rational& a, Jet jet) {
    add(-c, jet, 1);
    add(c * a, jet, 0);
    return *this;
  }
};

Stencil top(int j) {
  Builder b;
  switch (j) {
    case 0: b.add(1, Jet::U); break;
    case 1: b.add(1, Jet::EtaU); break;
    case 2: b.add(1, Jet::LapU).add(rat(-4, 3), Jet::U, 1); break;
    case 3: b.add(1, Jet::EtaLapU).add(-4, Jet::EtaU, 1); break;
    case 4: b.add(-1, Jet::Lap2U).add(-4, Jet::LapU, 1).add(8, Jet::U, 2); break;
    case 5: b.add(1, Jet::EtaLap2U).add(rat(4, 3), Jet::EtaLapU, 1).add(rat(8, 3), Jet::EtaU, 2); break;
  }
  return b.s;
}

Builder extend(int j) {
  Builder b;
  b.s = top(j);
  return b;
}

}  // namespace

OperatorList halfspace_operators() {
  OperatorList L;
  L.name = "halfspace";
  for (int j = 0; j < 6; ++j) L.B[j] = top(j);
  return L;
}

OperatorList ball_operators(int n) {
  Rational N = n, g = (N - 5) / 2;
  OperatorList L;
  L.name = "ball";
  L.B[0] = top(0);
  L.B[1] = extend(1).add(g, Jet::U).s;
  L.B[2] = extend(2).add(-4, Jet::EtaU).add((N - 3) * (N - 5) / 3, Jet::U).s;
  L.B[3] = extend(3)
               .add((N - 9) / 2, Jet::LapU)
               .add(-2 * (N - 7), Jet::U, 1)
               .add(N * N - 2 * N + 9, Jet::EtaU)
               .add(4 * rising(g, 3), Jet::U)
               .s;
  L.B[4] = extend(4)
               .add(4, Jet::EtaLapU)
               .add(16, Jet::EtaU, 1)
               .add((N - 3) * (N + 3), Jet::LapU)
               .add(-4 * (N * N - 4 * N + 1), Jet::U, 1)
               .add(-4 * (N - 3) * (N + 1), Jet::EtaU)
               .add(8 * rising(g, 4), Jet::U)
               .s;
  L.B[5] = extend(5)
               .add((N - 5) / 2, Jet::Lap2U)
               .add(2 * (N - 3) / 3, Jet::LapU, 1)
               .add(4 * (N - 1) / 3, Jet::U, 2)
               .add(-(N - 5) * (N + 3) / 3, Jet::EtaLapU)
               .add(-4 * (N * N - 2 * N - 9) / 3, Jet::EtaU, 1)
               .add(-(N - 5) * (N - 3) * (N + 3) / 6, Jet::LapU)
               .add(-2 * (N - 1) * (N * N - 2 * N - 9) / 3, Jet::U, 1)
               .add((N - 5) * (N - 3) * (N + 1) * (N + 3) / 6, Jet::EtaU)
               .add(rat(8, 3) * rising(g, 5), Jet::U)
               .s;
  return L;
}

OperatorList hemisphere_operators(int n) {
  Rational N = n;
  OperatorList L;
  L.name = "hemisphere";
  L.B[0] = top(0);
  L.B[1] = top(1);
  L.B[2] = extend(2).add((N - 3) * (N - 5) / 12, Jet::U).s;
  L.B[3] = extend(3).add((3 * N * N - 8 * N + 13) / 4, Jet::EtaU).s;
  L.B[4] = extend(4)
               .add((3 * N * N - 4 * N - 11) / 2, Jet::LapU)
               .add(-(3 * N + 1) * (N - 3), Jet::U, 1)
               .add(3 * (N + 1) * (N - 1) * (N - 3) * (N - 5) / 16, Jet::U)
               .s;
  L.B[5] = extend(5)
               .add(-(5 * N * N - 4 * N - 45) / 6, Jet::EtaLapU)
               .add(-(5 * N * N - 8 * N - 37) / 3, Jet::EtaU, 1)
               .add((N + 3) * (N + 1) * (15 * N * N - 100 * N + 149) / 48, Jet::EtaU)
               .s;
  return L;
}

OperatorList geodesic_forms(int n, DeltaBarConvention conv) {
  Rational N = n, Jb = N / 2, Psq = N / 4;
  // delta-bar((2 Pbar - Jbar g) d) + Jbar Lap-bar = cD Lap-bar on the round sphere
  Rational cD = conv == DeltaBarConvention::Divergence ? Rational(1) : N - 1;
  OperatorList L;
  L.name = "geodesic";
  Builder b0, b1, b2, b3, b4, b5;
  L.B[0] = b0.add(1, Jet::U).s;
  L.B[1] = b1.add(-1, Jet::Dr1).s;
  L.B[2] = b2.add(1, Jet::Dr2).lin(rat(1, 3), (N - 5) / 2 * Jb, Jet::U).s;
  L.B[3] = b3.add(-1, Jet::Dr3).lin(-3, (N - 3) / 2 * Jb, Jet::Dr1).s;
  L.B[4] = b4.add(-1, Jet::Dr4)
               .lin(6, (N - 1) / 2 * Jb, Jet::Dr2)
               .quad(3, (N - 1) / 2 * Jb, (N - 5) / 2 * Jb, Jet::U)
               .add(3 * cD, Jet::U, 1)
               .add(-3 * (N - 5) / 2 * Psq, Jet::U)
               .s;
  L.B[5] = b5.add(-1, Jet::Dr5)
               .lin(rat(10, 3), (N + 1) / 2 * Jb, Jet::Dr3)
               .quad(-5, (N + 1) / 2 * Jb, (N - 3) / 2 * Jb, Jet::Dr1)
               .add(-15 * cD, Jet::Dr1, 1)
               .add(15 * (N - 3) / 2 * Psq, Jet::Dr1)
               .s;
  return L;
}

OperatorList normal_form_operators(int n, const Rational& kappa) {
  Rational N = n, Jb = N * kappa / 2, Psq = N * kappa * kappa / 4;
  // delta-bar(Pbar grad u) = (kappa/2) Lap-bar u; gradients of Jbar vanish
  OperatorList L;
  L.name = "normal_form";
  L.B[0] = top(0);
  L.B[1] = top(1);
  L.B[2] = top(2);
  L.B[3] = extend(3).add(4 * (N - 1) / 3 * Jb, Jet::EtaU).s;
  L.B[4] = extend(4)
               .add(8 * kappa / 2, Jet::U, 1)
               .add(2 * (5 * N - 13) / 3 * Jb, Jet::LapU)
               .add(-8 * (2 * N - 5) / 3 * Jb, Jet::U, 1)
               .s;
  L.B[5] = extend(5)
               .add(-2 * (3 * N - 7) / 3 * Jb, Jet::EtaLapU)
               .add(-16 * (2 * N - 5) / 9 * Jb, Jet::EtaU, 1)
               .add(16 * kappa / 2, Jet::EtaU, 1)
               .add(8, Jet::EtaPHessU)
               .add(-(N - 9), Jet::HessJEtaU)
               .add(-8 * (N - 4) * Psq, Jet::EtaU)
               .add(8 * (2 * N * N - 10 * N + 5) / 9 * Jb * Jb, Jet::EtaU)
               .s;
  return L;
}

}  // namespace gjms6
