#include "gjms6/expfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace gjms6 {

std::shared_ptr<const ExpAlgebra> ExpAlgebra::make(const MultiPoly& sigma, int yvar, int K, int epsvar) {
  auto a = std::make_shared<ExpAlgebra>();
  a->yvar = yvar;
  a->epsvar = epsvar;
  a->K = K;
  a->sigma = sigma;
  a->cap.set(yvar, K);
  if (epsvar >= 0) a->cap.set(epsvar, 1);
  for (int i = 0; i < kMaxVars; ++i) {
    a->dsigma.push_back(sigma.diff(i));
    a->dsigma_bdry.push_back(sigma.diff(i).at(yvar, 0));
  }
  a->sigma_bdry_zero = sigma.at(yvar, 0).is_zero();
  return a;
}

EField EField::poly(AlgPtr alg, const MultiPoly& p, bool boundary) {
  EField f(alg, boundary);
  MultiPoly q = boundary ? p.at(alg->yvar, 0) : p;
  if (q.degree(alg->yvar) > alg->K) f.valid_ = alg->K;
  f.add(0, q.truncated(alg->cap));
  return f;
}

EField EField::constant(AlgPtr alg, const Rational& c, bool boundary) {
  return poly(alg, MultiPoly::constant(c), boundary);
}

EField EField::exp(AlgPtr alg, const Rational& k, bool boundary) {
  if (k == 0) return constant(alg, 1, boundary);
  if (alg->dual()) {
    MultiPoly p = MultiPoly::constant(1) + k * (MultiPoly::variable(alg->epsvar) * alg->sigma);
    return poly(alg, p, boundary);
  }
  EField f(alg, boundary);
  if (boundary && alg->sigma_bdry_zero) {
    f.add(0, MultiPoly::constant(1));
  } else {
    f.add(k, MultiPoly::constant(1));
  }
  return f;
}

EField EField::exp_scaled(AlgPtr alg, const Rational& k, int scale, bool boundary) {
  if (scale == 0) return constant(alg, 1, boundary);
  return exp(alg, k, boundary);
}

void EField::add(const Rational& w, const MultiPoly& p) {
  if (p.is_zero()) return;
  auto it = parts_.find(w);
  if (it == parts_.end()) {
    parts_.emplace(w, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) parts_.erase(it);
}

EField& EField::operator+=(const EField& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_ && o.alg_ != alg_) throw std::invalid_argument("EField: mixed algebras");
  for (auto& [w, p] : o.parts_) add(w, p);
  valid_ = std::min(valid_, o.valid_);
  boundary_ = boundary_ || o.boundary_;
  return *this;
}

EField& EField::operator-=(const EField& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_ && o.alg_ != alg_) throw std::invalid_argument("EField: mixed algebras");
  for (auto& [w, p] : o.parts_) add(w, -p);
  valid_ = std::min(valid_, o.valid_);
  boundary_ = boundary_ || o.boundary_;
  return *this;
}

EField& EField::operator*=(const Rational& c) {
  if (c == 0) {
    parts_.clear();
    return *this;
  }
  for (auto& kv : parts_) kv.second *= c;
  return *this;
}

EField EField::operator-() const {
  EField r = *this;
  r *= -1;
  return r;
}

EField operator*(const EField& a, const EField& b) {
  AlgPtr alg = a.alg_ ? a.alg_ : b.alg_;
  EField r(alg, a.boundary_ || b.boundary_);
  r.valid_ = std::min(a.valid_, b.valid_);
  if (a.is_zero() || b.is_zero()) return r;
  bool truncates = false;
  for (auto& [wa, pa] : a.parts_) {
    for (auto& [wb, pb] : b.parts_) {
      if (pa.degree(alg->yvar) + pb.degree(alg->yvar) > alg->K) truncates = true;
      r.add(wa + wb, MultiPoly::mul(pa, pb, alg->cap));
    }
  }
  if (truncates) r.valid_ = std::min(r.valid_, alg->K);
  return r;
}

EField EField::d(int var) const {
  EField r(alg_, boundary_);
  if (boundary_ && var == alg_->yvar) throw std::invalid_argument("EField: normal derivative of a boundary field");
  const auto& ds = boundary_ ? alg_->dsigma_bdry : alg_->dsigma;
  bool truncates = false;
  for (auto& [w, p] : parts_) {
    MultiPoly q = p.diff(var);
    if (w != 0) {
      if (ds[var].degree(alg_->yvar) + p.degree(alg_->yvar) > alg_->K) truncates = true;
      q += w * MultiPoly::mul(ds[var], p, alg_->cap);
    }
    r.add(w, q);
  }
  r.valid_ = valid_;
  if (var == alg_->yvar && valid_ != kExact) r.valid_ = valid_ - 1;
  if (truncates) r.valid_ = std::min(r.valid_, alg_->K);
  return r;
}

EField EField::restrict() const {
  if (boundary_) return *this;
  if (valid_ < 0) throw std::runtime_error("EField: truncation too shallow for boundary evaluation");
  EField r(alg_, true);
  for (auto& [w, p] : parts_) {
    Rational wr = alg_->sigma_bdry_zero ? Rational(0) : w;
    r.add(wr, p.at(alg_->yvar, 0));
  }
  return r;
}

EField EField::eps_part(int k) const {
  if (!alg_ || !alg_->dual()) throw std::logic_error("EField::eps_part: not a dual field");
  EField r(alg_, boundary_);
  r.valid_ = valid_;
  for (auto& [w, p] : parts_) {
    MultiPoly q = p.coeff_of(alg_->epsvar, k);
    r.add(w, q);
  }
  return r;
}

std::size_t EField::terms() const {
  std::size_t s = 0;
  for (auto& [w, p] : parts_) s += p.size();
  return s;
}

}  // namespace gjms6
