#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gjms6/poly.hpp"

namespace gjms6 {

// Shared data for fields of the form sum_k e^{k sigma} p_k on the half-space.
// The p_k are polynomials truncated in the normal variable y at order K.
// In dual mode the weights are replaced by e^{k eps sigma} = 1 + k eps sigma
// with eps^2 = 0, which turns every computation into a first variation.
struct ExpAlgebra {
  int yvar = 0;
  int epsvar = -1;
  int K = 6;
  MultiPoly sigma;
  std::vector<MultiPoly> dsigma;        // d_i sigma
  std::vector<MultiPoly> dsigma_bdry;   // d_i sigma at y = 0
  bool sigma_bdry_zero = false;
  DegreeCap cap;

  static std::shared_ptr<const ExpAlgebra> make(const MultiPoly& sigma, int yvar, int K, int epsvar = -1);
  bool dual() const { return epsvar >= 0; }
};

using AlgPtr = std::shared_ptr<const ExpAlgebra>;

class EField {
 public:
  static constexpr int kExact = 1 << 20;

  EField() = default;
  explicit EField(AlgPtr alg, bool boundary = false) : alg_(std::move(alg)), boundary_(boundary) {}
  static EField poly(AlgPtr alg, const MultiPoly& p, bool boundary = false);
  static EField constant(AlgPtr alg, const Rational& c, bool boundary = false);
  // e^{k sigma}; in dual mode 1 + k eps sigma
  static EField exp(AlgPtr alg, const Rational& k, bool boundary = false);
  // e^{k phi} where phi = scale * sigma (scale 0 or 1)
  static EField exp_scaled(AlgPtr alg, const Rational& k, int scale, bool boundary);

  const std::map<Rational, MultiPoly>& parts() const { return parts_; }
  const AlgPtr& alg() const { return alg_; }
  bool boundary() const { return boundary_; }
  int valid() const { return valid_; }
  bool is_zero() const { return parts_.empty(); }

  EField& operator+=(const EField& o);
  EField& operator-=(const EField& o);
  EField& operator*=(const Rational& c);
  EField operator-() const;
  friend EField operator+(EField a, const EField& b) { return a += b; }
  friend EField operator-(EField a, const EField& b) { return a -= b; }
  friend EField operator*(const Rational& c, EField a) { return a *= c; }
  friend EField operator*(const EField& a, const EField& b);

  // coordinate derivative; tangential derivatives of boundary fields stay on the boundary
  EField d(int var) const;
  // restriction to y = 0
  EField restrict() const;
  // eps^k coefficient in dual mode
  EField eps_part(int k) const;

  std::size_t terms() const;

 private:
  void add(const Rational& w, const MultiPoly& p);
  AlgPtr alg_;
  std::map<Rational, MultiPoly> parts_;
  int valid_ = kExact;
  bool boundary_ = false;
};

}  // namespace gjms6
