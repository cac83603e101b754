#pragma once

// Boundary operators B_j and their scalar blocks, written once over a
// geometry context. A context supplies interior fields F, boundary fields B
// and the primitives listed below; every model, the conformal jet engine and
// the per-mode series engine instantiate the same formulas.
//
//   F lap(F)              interior Laplacian
//   B bdry(F), eta(F)     restriction, outward normal derivative
//   B hessNN(F)           Hessian in (eta, eta)
//   B lapBar(B)           boundary Laplacian
//   B gradDot(B, B)       boundary gradient pairing
//   B hessDot(B, B)       boundary Hessian pairing
//   B pbarGrad(B, B)      Pbar(grad a, grad b)
//   B divPbarGrad(B)      divergence of Pbar(grad a)
//   B pbarHess(B)         <Pbar, Hess a>
//   B H(), Pnn(), Jbar(), PbarSq(), etaPsq(), nablaEtaPnn(); F J()
//   B etaPHess(F)         eta <P, Hess u>
//   B cst(Rational)

#include <stdexcept>

#include "gjms6/rational.hpp"

namespace gjms6 {

// Coefficient of H^2 Lap-bar u in B4. `printed` selects the value as
// typeset, (3n^2-23n+66)/(2n^2); the default is (3n^2-23n+34)/(2n^2).
inline Rational b4_h2_lapbar_coeff(const Rational& n, bool printed = false) {
  return (3 * n * n - 23 * n + (printed ? 66 : 34)) / (2 * n * n);
}

// Coefficient of <grad H^2, grad u> in B4; typeset as (5n^2-53n+128)/(2n^2),
// covariance requires (5n^2-45n+112)/(2n^2).
inline Rational b4_h2_grad_coeff(const Rational& n, bool printed = false) {
  return printed ? (5 * n * n - 53 * n + 128) / (2 * n * n) : (5 * n * n - 45 * n + 112) / (2 * n * n);
}

template <class Ctx>
struct BoundaryFormulas {
  using F = typename Ctx::F;
  using B = typename Ctx::B;

  Ctx& c;
  Rational n;
  bool printed_b4 = false;

  BoundaryFormulas(Ctx& ctx, const Rational& dim) : c(ctx), n(dim) {}

  Rational q(long p, long d = 1) const { return rat(p, d); }
  Rational half_crit() const { return (n - 5) / 2; }

  B etaJ() { return c.eta(c.J()); }
  B lapJ() { return c.bdry(c.lap(c.J())); }

  B T(int j) {
    switch (j) {
      case 0: return c.cst(0);
      case 1: return T1();
      case 2: return T2();
      case 3: return T3();
      case 4: return T4();
      case 5: return T5();
    }
    throw std::out_of_range("T_j: j must be in 1..5");
  }

  B T1() { return (1 / n) * c.H(); }

  B T2() {
    B H = c.H();
    return q(1, 3) * c.Jbar() - c.Pnn() + ((n - 4) / (2 * n * n)) * (H * H);
  }

  B T3() {
    B H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    return -etaJ() - (4 / n) * c.lapBar(H) - ((n - 9) / (2 * n)) * (H * P) + ((3 * n - 11) / (2 * n)) * (H * Jb) +
           ((n * n - 5 * n + 12) / (4 * n * n * n)) * (H * H * H);
  }

  B S2() {
    B H = c.H();
    return ((3 * n - 7) / 2) * c.Jbar() - ((n - 13) / 2) * c.Pnn() + ((3 * n * n - 19 * n + 36) / (4 * n * n)) * (H * H);
  }

  B S3() {
    B H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    return (n - 9) * etaJ() + (16 / n) * c.lapBar(H) + ((3 * n * n - 15 * n + 10) / n) * (H * Jb) +
           ((n * n - 5 * n + 26) / n) * (H * P) - ((n * n * n - 7 * n * n + 12 * n - 24) / (2 * n * n * n)) * (H * H * H);
  }

  B T4() {
    B H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    B H2 = H * H;
    B out = lapJ() - 4 * c.lapBar(Jb) + 4 * c.lapBar(P);
    out += -(4 * (n - 4) / (n * n)) * (H * c.lapBar(H));
    out += -(4 / n) * (H * etaJ());
    out += -3 * (n - 1) * (Jb * P);
    out += ((n * n - 3 * n + 18) / (2 * n * n)) * (H2 * P);
    out += ((3 * n * n - 13 * n + 2) / (2 * n * n)) * (H2 * Jb);
    out += -(4 * (n - 6) / (n * n)) * c.gradDot(H, H);
    out += -4 * c.PbarSq();
    out += (3 * (n - 1) / 2) * (Jb * Jb);
    out += -((n - 9) / 2) * (P * P);
    out += -((n * n * n - 5 * n * n + 4 * n - 24) / (8 * n * n * n * n)) * (H2 * H2);
    return out;
  }

  B R13() {
    B H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    return -2 * (n - 6) * etaJ() + (2 * (n - 9) / (3 * n)) * c.lapBar(H) - ((5 * n * n - 28 * n + 15) / (6 * n)) * (H * Jb) -
           ((n * n - 16 * n + 55) / (2 * n)) * (H * P) + ((n * n * n - 6 * n * n + 11 * n - 30) / (4 * n * n * n)) * (H * H * H);
  }

  B R23() {
    B H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    return -((5 * n - 19) / 3) * etaJ() + (2 * (5 * n - 21) / (3 * n)) * c.lapBar(H) -
           ((5 * n * n - 20 * n + 7) / (2 * n)) * (H * Jb) - (5 * (n - 3) * (n - 5) / (6 * n)) * (H * P) +
           ((5 * n * n * n - 26 * n * n + 23 * n + 6) / (12 * n * n * n)) * (H * H * H);
  }

  B S4() {
    B H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    B H2 = H * H;
    Rational n2 = n * n, n3 = n2 * n, n4 = n3 * n;
    B out = -((n - 5) / 2) * lapJ();
    out += -(2 * (3 * n - 11) / 3) * c.lapBar(Jb);
    out += -(n - 9) * c.hessNN(c.J());
    out += -(2 * (n - 13) / 3) * c.lapBar(P);
    out += -(16 / n) * (H * c.nablaEtaPnn());
    out += ((6 * n2 - 38 * n + 72) / (3 * n2)) * (H * c.lapBar(H));
    out += ((6 * n2 - 62 * n + 180) / (3 * n2)) * c.gradDot(H, H);
    out += -((3 * n2 - 20 * n + 13) / (2 * n)) * (H * etaJ());
    out += -((3 * n3 - 24 * n2 + 103 * n - 130) / (4 * n2)) * (H2 * P);
    out += -((15 * n3 - 68 * n2 - 5 * n + 42) / (12 * n2)) * (H2 * Jb);
    out += ((5 * n2 - 54 * n + 49) / 6) * (Jb * P);
    out += ((5 * n4 - 26 * n3 + 17 * n2 - 84 * n + 120) / (16 * n4)) * (H2 * H2);
    out += ((15 * n2 - 50 * n - 29) / 12) * (Jb * Jb);
    out += ((n2 - 22 * n + 149) / 4) * (P * P);
    out += -2 * (3 * n - 11) * c.PbarSq();
    return out;
  }

  // <sigma_4, grad u> for a boundary field b = u|_M
  B sigma4_dot(const B& b) {
    B H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    Rational n2 = n * n, n3 = n2 * n;
    B out = (16 * (n - 6) / (3 * n)) * c.gradDot(c.lapBar(H), b);
    out += ((16 * n2 - 96 * n - 64) / (3 * n)) * c.pbarGrad(H, b);
    out += -((7 * n - 47) / 3) * c.gradDot(etaJ(), b);
    out += -((15 * n2 - 70 * n + 119) / (6 * n)) * (H * c.gradDot(Jb, b));
    out += -(2 * (5 * n2 - 45 * n + 92) / (3 * n)) * (Jb * c.gradDot(H, b));
    out += -((2 * n2 - 34 * n + 168) / (3 * n)) * (P * c.gradDot(H, b));
    out += -((7 * n2 - 86 * n + 303) / (6 * n)) * (H * c.gradDot(P, b));
    out += ((3 * n3 - 32 * n2 + 117 * n - 144) / (6 * n3)) * c.gradDot(H * H * H, b);
    return out;
  }

  B T5() {
    B H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    B H2 = H * H, H3 = H2 * H;
    B eJ = etaJ();
    B LH = c.lapBar(H);
    Rational n2 = n * n, n3 = n2 * n, n5 = n3 * n2;
    B out = -c.eta(c.lap(c.J()));
    out += -q(4, 3) * c.lapBar(eJ);
    out += (8 / (3 * n)) * c.lapBar(LH);
    out += (4 / n) * (H * c.hessNN(c.J()));
    out += -((n + 3) / (2 * n)) * (H * lapJ());
    out += -(2 * (3 * n - 7) / (3 * n)) * (H * c.lapBar(Jb));
    out += -(2 * (n - 9) / (3 * n)) * (H * c.lapBar(P));
    out += -(4 * (n - 12) / (3 * n)) * c.gradDot(H, P);
    out += -(4 * (3 * n - 16) / (3 * n)) * c.gradDot(H, Jb);
    out += ((5 * n - 1) / 3) * (Jb * eJ);
    out += (n - 5) * (P * eJ);
    out += -(8 / n2) * (H2 * c.nablaEtaPnn());
    out += -4 * c.etaPsq();
    out += -((n2 - 7 * n - 6) / (2 * n2)) * (H2 * eJ);
    out += -(2 * (n - 9) / (3 * n)) * (P * LH);
    out += ((n2 - 5 * n + 12) / n3) * (H2 * LH);
    out += (16 / n) * c.pbarHess(H);
    out += -(10 * (n - 1) / (3 * n)) * (Jb * LH);
    out += ((15 * n2 - 10 * n - 37) / (12 * n)) * (H * Jb * Jb);
    out += ((n - 5) * (n - 9) / (4 * n)) * (H * P * P);
    out += -(6 * (n - 1) / n) * (H * c.PbarSq());
    out += ((n - 5) * (5 * n + 3) / (6 * n)) * (H * Jb * P);
    out += -((n3 - 4 * n2 + 33 * n - 30) / (4 * n3)) * (H3 * P);
    out += (2 * (n - 2) * (n - 7) / n3) * (H * c.gradDot(H, H));
    out += -((5 * n3 - 8 * n2 - 19 * n - 42) / (12 * n3)) * (H3 * Jb);
    out += ((n2 * n2 - 2 * n3 - 3 * n2 - 52 * n + 24) / (16 * n5)) * (H2 * H3);
    return out;
  }

  // B_j(u) for j in 0..5
  B apply(int j, const F& u) {
    switch (j) {
      case 0: return c.bdry(u);
      case 1: return B1(u);
      case 2: return B2(u);
      case 3: return B3(u);
      case 4: return B4(u);
      case 5: return B5(u);
    }
    throw std::out_of_range("B_j: j must be in 0..5");
  }

  B B1(const F& u) { return c.eta(u) + half_crit() * (T1() * c.bdry(u)); }

  B B2(const F& u) {
    B b = c.bdry(u);
    return c.bdry(c.lap(u)) - q(4, 3) * c.lapBar(b) - (4 / n) * (c.H() * c.eta(u)) + half_crit() * (T2() * b);
  }

  B B3(const F& u) {
    B b = c.bdry(u), H = c.H();
    F Lu = c.lap(u);
    B out = c.eta(Lu) - 4 * c.lapBar(c.eta(u));
    out += ((n - 9) / (2 * n)) * (H * c.hessNN(u));
    out += -((3 * n - 19) / (2 * n)) * (H * c.lapBar(b));
    out += -(4 * (n - 4) / n) * c.gradDot(H, b);
    out += S2() * c.eta(u);
    out += half_crit() * (T3() * b);
    return out;
  }

  B B4(const F& u) {
    B b = c.bdry(u), H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    B H2 = H * H;
    B eu = c.eta(u);
    F Lu = c.lap(u);
    Rational n2 = n * n;
    B out = -c.bdry(c.lap(Lu)) - 4 * c.lapBar(c.bdry(Lu)) + 8 * c.lapBar(c.lapBar(b));
    out += (4 / n) * (H * c.eta(Lu));
    out += (16 / n) * (H * c.lapBar(eu));
    out += ((3 * n - 5) * Jb + (n - 11) * P - ((n2 - 5 * n + 18) / (2 * n2)) * H2) * c.hessNN(u);
    out += -((3 * (n - 3)) * Jb - (3 * n - 13) * P + b4_h2_lapbar_coeff(n, printed_b4) * H2) * c.lapBar(b);
    out += 8 * c.divPbarGrad(b);
    out += (48 / n) * c.gradDot(H, eu);
    out += -((3 * n - 11) * c.gradDot(Jb, b) - (5 * n - 29) * c.gradDot(P, b) +
             b4_h2_grad_coeff(n, printed_b4) * c.gradDot(H2, b));
    out += S3() * eu;
    out += half_crit() * (T4() * b);
    return out;
  }

  B B5(const F& u) {
    B b = c.bdry(u), H = c.H(), P = c.Pnn(), Jb = c.Jbar();
    B H2 = H * H;
    B eu = c.eta(u);
    F Lu = c.lap(u);
    F LLu = c.lap(Lu);
    B hnn = c.hessNN(u);
    B Lb = c.lapBar(b);
    Rational n2 = n * n;
    B out = c.eta(LLu) + q(4, 3) * c.lapBar(c.eta(Lu)) + q(8, 3) * c.lapBar(c.lapBar(eu));
    out += ((n + 3) / (2 * n)) * (H * c.bdry(LLu));
    out += (2 * (n - 9) / (3 * n)) * (H * c.lapBar(hnn));
    out += -(4 / n) * (H * c.hessNN(Lu));
    out += (2 * (3 * n - 11) / (3 * n)) * (H * c.lapBar(Lb));
    out += -(((5 * n - 7) / 3) * Jb + (n - 7) * P - ((n2 - 9 * n + 10) / (2 * n2)) * H2) * c.eta(Lu);
    out += -((2 * (5 * n - 9) / 3) * Jb + (2 * (n - 13) / 3) * P - ((3 * n2 - 19 * n + 12) / (3 * n2)) * H2) *
           c.lapBar(eu);
    out += 8 * c.etaPHess(u);
    out += 16 * c.divPbarGrad(eu);
    out += (4 * (n - 12) / (3 * n)) * c.gradDot(H, hnn);
    out += (4 * (5 * n - 28) / (3 * n)) * c.gradDot(H, Lb);
    out += R13() * hnn;
    out += (4 * (3 * n - 7) / n) * (H * c.divPbarGrad(b));
    out += (8 * (2 * n - 14) / (3 * n)) * c.hessDot(H, b);
    out += R23() * Lb;
    out += -c.gradDot(((15 * n - 47) / 3) * Jb + ((7 * n - 79) / 3) * P - ((15 * n2 - 139 * n + 168) / (6 * n2)) * H2, eu);
    out += sigma4_dot(b);
    out += S4() * eu;
    out += half_crit() * (T5() * b);
    return out;
  }
};

}  // namespace gjms6
