#include "gjms6/conf_ctx.hpp"

#include <stdexcept>

namespace gjms6 {

ConfCtx::ConfCtx(AlgPtr alg, int n, std::vector<int> tangential, bool conformal)
    : alg_(std::move(alg)), n_(n), scale_(conformal ? 1 : 0), tang_(std::move(tangential)), y_(alg_->yvar) {
  if (int(tang_.size()) > n_) throw std::invalid_argument("ConfCtx: more active directions than dimensions");
  act_ = tang_;
  act_.push_back(y_);
  MultiPoly p(kMaxVars);
  if (conformal) {
    p = alg_->sigma;
    if (alg_->dual()) p = MultiPoly::variable(alg_->epsvar) * p;
  }
  phi_ = EField::poly(alg_, p);
  for (int v : act_) dphi_.push_back(EField::poly(alg_, p.diff(v)));
  for (int v : tang_) dphib_.push_back(EField::poly(alg_, p.diff(v), true));
}

EField ConfCtx::weighted(const Rational& w, const MultiPoly& p) const { return expw(w) * field(p); }

EField ConfCtx::lap(const F& f) {
  EField s(alg_);
  Rational m2 = n_ + 1 - 2;
  for (std::size_t a = 0; a < act_.size(); ++a) {
    EField fi = f.d(act_[a]);
    s += fi.d(act_[a]);
    if (scale_) s += m2 * (dphi_[a] * fi);
  }
  return ephi(-2) * s;
}

EField ConfCtx::eta(const F& f) { return (-(ephi(-1) * f.d(y_))).restrict(); }

ConfCtx::Sym ConfCtx::hess_int(const F& f) {
  std::size_t k = act_.size();
  std::vector<EField> g;
  for (int v : act_) g.push_back(f.d(v));
  EField dot(alg_);
  if (scale_)
    for (std::size_t a = 0; a < k; ++a) dot += dphi_[a] * g[a];
  Sym h;
  h.inactive = n_ + 1 - int(k);
  h.m.assign(k, std::vector<EField>(k, EField(alg_)));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      EField e = g[a].d(act_[b]);
      if (scale_) {
        e -= g[a] * dphi_[b];
        e -= g[b] * dphi_[a];
        if (a == b) e += dot;
      }
      h.m[a][b] = e;
      h.m[b][a] = e;
    }
  }
  h.iso = dot;
  return h;
}

EField ConfCtx::hessNN(const F& f) {
  // only the (y, y) entry is needed
  std::size_t ya = act_.size() - 1;
  EField fy = f.d(y_);
  EField e = fy.d(y_);
  if (scale_) {
    EField dot(alg_);
    for (std::size_t a = 0; a < act_.size(); ++a) dot += dphi_[a] * f.d(act_[a]);
    e -= 2 * (fy * dphi_[ya]);
    e += dot;
  }
  return (ephi(-2) * e).restrict();
}

EField ConfCtx::contract(const Sym& a, const Sym& b) const {
  EField s(alg_, a.iso.boundary());
  for (std::size_t i = 0; i < a.m.size(); ++i)
    for (std::size_t j = 0; j < a.m.size(); ++j) s += a.m[i][j] * b.m[i][j];
  if (a.inactive) s += Rational(a.inactive) * (a.iso * b.iso);
  return s;
}

const ConfCtx::Sym& ConfCtx::schouten() {
  if (P_) return *P_;
  std::size_t k = act_.size();
  Sym P;
  P.inactive = n_ + 1 - int(k);
  P.m.assign(k, std::vector<EField>(k, EField(alg_)));
  EField sq(alg_);
  for (std::size_t a = 0; a < k; ++a) sq += dphi_[a] * dphi_[a];
  EField iso = rat(-1, 2) * sq;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      EField e = -dphi_[a].d(act_[b]) + dphi_[a] * dphi_[b];
      if (a == b) e += iso;
      P.m[a][b] = e;
      P.m[b][a] = e;
    }
  }
  P.iso = iso;
  P_ = P;
  return *P_;
}

EField ConfCtx::J() {
  if (J_) return *J_;
  const Sym& P = schouten();
  EField tr(alg_);
  for (std::size_t a = 0; a < P.m.size(); ++a) tr += P.m[a][a];
  tr += Rational(P.inactive) * P.iso;
  J_ = ephi(-2) * tr;
  return *J_;
}

EField ConfCtx::Pnn() {
  if (Pnn_) return *Pnn_;
  const Sym& P = schouten();
  std::size_t ya = act_.size() - 1;
  Pnn_ = (ephi(-2) * P.m[ya][ya]).restrict();
  return *Pnn_;
}

EField ConfCtx::etaPsq() {
  if (etaPsq_) return *etaPsq_;
  const Sym& P = schouten();
  etaPsq_ = eta(ephi(-4) * contract(P, P));
  return *etaPsq_;
}

EField ConfCtx::etaPHess(const F& u) {
  const Sym& P = schouten();
  Sym Hu = hess_int(u);
  return eta(ephi(-4) * contract(P, Hu));
}

EField ConfCtx::nablaEtaPnn() {
  if (nablaEtaPnn_) return *nablaEtaPnn_;
  const Sym& P = schouten();
  std::size_t ya = act_.size() - 1;
  EField e = P.m[ya][ya].d(y_);
  if (scale_) {
    EField s = 2 * (dphi_[ya] * P.m[ya][ya]);
    for (std::size_t l = 0; l < act_.size(); ++l) s -= dphi_[l] * P.m[l][ya];
    e -= 2 * s;
  }
  nablaEtaPnn_ = (-(ephi(-3) * e)).restrict();
  return *nablaEtaPnn_;
}

EField ConfCtx::H() {
  if (H_) return *H_;
  std::size_t ya = act_.size() - 1;
  H_ = (Rational(-n_) * (ephi(-1) * dphi_[ya])).restrict();
  return *H_;
}

EField ConfCtx::lapBar(const B& b) {
  EField s(alg_, true);
  Rational n2 = n_ - 2;
  for (std::size_t a = 0; a < tang_.size(); ++a) {
    EField bi = b.d(tang_[a]);
    s += bi.d(tang_[a]);
    if (scale_) s += n2 * (dphib_[a] * bi);
  }
  return ephi_bar(-2) * s;
}

EField ConfCtx::gradDot(const B& a, const B& b) {
  EField s(alg_, true);
  for (int v : tang_) s += a.d(v) * b.d(v);
  return ephi_bar(-2) * s;
}

ConfCtx::Sym ConfCtx::hess_bar(const B& b) {
  std::size_t k = tang_.size();
  std::vector<EField> g;
  for (int v : tang_) g.push_back(b.d(v));
  EField dot(alg_, true);
  if (scale_)
    for (std::size_t a = 0; a < k; ++a) dot += dphib_[a] * g[a];
  Sym h;
  h.inactive = n_ - int(k);
  h.m.assign(k, std::vector<EField>(k, EField(alg_, true)));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = a; c < k; ++c) {
      EField e = g[a].d(tang_[c]);
      if (scale_) {
        e -= g[a] * dphib_[c];
        e -= g[c] * dphib_[a];
        if (a == c) e += dot;
      }
      h.m[a][c] = e;
      h.m[c][a] = e;
    }
  }
  h.iso = dot;
  if (!scale_) h.iso = EField(alg_, true);
  return h;
}

EField ConfCtx::hessDot(const B& a, const B& b) {
  Sym ha = hess_bar(a), hb = hess_bar(b);
  return ephi_bar(-4) * contract(ha, hb);
}

const ConfCtx::Sym& ConfCtx::schouten_bar() {
  if (Pbar_) return *Pbar_;
  std::size_t k = tang_.size();
  Sym P;
  P.inactive = n_ - int(k);
  P.m.assign(k, std::vector<EField>(k, EField(alg_, true)));
  EField sq(alg_, true);
  for (std::size_t a = 0; a < k; ++a) sq += dphib_[a] * dphib_[a];
  EField iso = rat(-1, 2) * sq;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = a; c < k; ++c) {
      EField e = -dphib_[a].d(tang_[c]) + dphib_[a] * dphib_[c];
      if (a == c) e += iso;
      P.m[a][c] = e;
      P.m[c][a] = e;
    }
  }
  P.iso = iso;
  Pbar_ = P;
  return *Pbar_;
}

EField ConfCtx::Jbar() {
  if (Jbar_) return *Jbar_;
  const Sym& P = schouten_bar();
  EField tr(alg_, true);
  for (std::size_t a = 0; a < P.m.size(); ++a) tr += P.m[a][a];
  tr += Rational(P.inactive) * P.iso;
  Jbar_ = ephi_bar(-2) * tr;
  return *Jbar_;
}

EField ConfCtx::PbarSq() {
  if (PbarSq_) return *PbarSq_;
  const Sym& P = schouten_bar();
  PbarSq_ = ephi_bar(-4) * contract(P, P);
  return *PbarSq_;
}

EField ConfCtx::pbarGrad(const B& a, const B& b) {
  const Sym& P = schouten_bar();
  EField s(alg_, true);
  for (std::size_t i = 0; i < tang_.size(); ++i) {
    EField ai = a.d(tang_[i]);
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < tang_.size(); ++j) s += P.m[i][j] * (ai * b.d(tang_[j]));
  }
  return ephi_bar(-4) * s;
}

EField ConfCtx::pbarHess(const B& a) {
  const Sym& P = schouten_bar();
  Sym ha = hess_bar(a);
  return ephi_bar(-4) * contract(P, ha);
}

EField ConfCtx::divPbarGrad(const B& a) {
  const Sym& P = schouten_bar();
  std::size_t k = tang_.size();
  std::vector<EField> g;
  for (int v : tang_) g.push_back(a.d(v));
  EField s(alg_, true);
  Rational n2 = n_ - 2;
  for (std::size_t j = 0; j < k; ++j) {
    EField alpha(alg_, true);
    for (std::size_t i = 0; i < k; ++i) alpha += P.m[j][i] * g[i];
    alpha = ephi_bar(-2) * alpha;
    s += alpha.d(tang_[j]);
    if (scale_) s += n2 * (dphib_[j] * alpha);
  }
  return ephi_bar(-2) * s;
}

}  // namespace gjms6
