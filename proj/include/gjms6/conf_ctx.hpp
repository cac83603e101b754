#pragma once

#include <optional>
#include <vector>

#include "gjms6/expfield.hpp"

namespace gjms6 {

// Geometry context for the half-space {y >= 0} with metric e^{2 phi}(dx^2 + dy^2).
// phi is 0 (flat) or the algebra's sigma (eps*sigma in dual mode). Only the
// coordinates listed in `tangential` plus y carry dependence; the remaining
// directions enter through dimension counts.
class ConfCtx {
 public:
  using F = EField;
  using B = EField;

  ConfCtx(AlgPtr alg, int n, std::vector<int> tangential, bool conformal);

  int n() const { return n_; }
  const AlgPtr& alg() const { return alg_; }

  F field(const MultiPoly& p) const { return EField::poly(alg_, p); }
  F weighted(const Rational& w, const MultiPoly& p) const;
  F expw(const Rational& k) const { return EField::exp(alg_, k); }
  B expw_bdry(const Rational& k) const { return EField::exp(alg_, k, true); }

  B cst(const Rational& c) const { return EField::constant(alg_, c, true); }
  F lap(const F& f);
  B bdry(const F& f) { return f.restrict(); }
  B eta(const F& f);
  B hessNN(const F& f);

  B lapBar(const B& b);
  B gradDot(const B& a, const B& b);
  B hessDot(const B& a, const B& b);
  B pbarGrad(const B& a, const B& b);
  B divPbarGrad(const B& a);
  B pbarHess(const B& a);

  B H();
  B Pnn();
  B Jbar();
  B PbarSq();
  F J();
  B etaPsq();
  B nablaEtaPnn();
  B etaPHess(const F& u);

  // interior Schouten tensor in coordinates; entry (i, j) of the active block
  struct Sym {
    std::vector<std::vector<EField>> m;
    EField iso;
    int inactive = 0;
  };
  const Sym& schouten();

 private:
  F ephi(const Rational& k) const { return EField::exp_scaled(alg_, k, scale_, false); }
  B ephi_bar(const Rational& k) const { return EField::exp_scaled(alg_, k, scale_, true); }
  Sym hess_int(const F& f);
  Sym hess_bar(const B& b);
  EField contract(const Sym& a, const Sym& b) const;
  const Sym& schouten_bar();

  AlgPtr alg_;
  int n_;
  int scale_;
  std::vector<int> tang_;
  std::vector<int> act_;
  int y_;
  F phi_;
  std::vector<F> dphi_;           // indexed by position in act_
  std::vector<B> dphib_;          // indexed by position in tang_
  std::optional<Sym> P_, Pbar_;
  std::optional<B> H_, Pnn_, Jbar_, PbarSq_, etaPsq_, nablaEtaPnn_;
  std::optional<F> J_;
};

}  // namespace gjms6
