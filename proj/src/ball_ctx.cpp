#include "gjms6/ball_ctx.hpp"

namespace gjms6 {

MultiPoly BallPolyCtx::hessNN(const F& f) const {
  MultiPoly e = euler(f, d_);
  return euler(e, d_) - e;
}

MultiPoly BallPolyCtx::lapBar(const B& b) const {
  MultiPoly e = euler(b, d_);
  return laplacian(b, d_) - euler(e, d_) - Rational(n_ - 1) * e;
}

MultiPoly BallPolyCtx::gradDot(const B& a, const B& b) const {
  if (a.is_constant() || b.is_constant()) return MultiPoly();
  MultiPoly s;
  for (int i = 0; i < d_; ++i) s += a.diff(i) * b.diff(i);
  return s - euler(a, d_) * euler(b, d_);
}

MultiPoly BallPolyCtx::hessDot(const B& a, const B& b) const {
  if (a.is_constant() || b.is_constant()) return MultiPoly();
  // Hess-bar a = Pi Ha Pi - (x.grad a) Pi with Pi = I - x x^T
  std::vector<std::vector<MultiPoly>> Ha(d_, std::vector<MultiPoly>(d_)), Hb = Ha;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) {
      Ha[i][j] = a.diff(i).diff(j);
      Hb[i][j] = b.diff(i).diff(j);
    }
  std::vector<MultiPoly> x(d_);
  for (int i = 0; i < d_; ++i) x[i] = MultiPoly::variable(i);
  MultiPoly trAB, xABx, xAx, xBx;
  std::vector<MultiPoly> Ax(d_), Bx(d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) {
      trAB += Ha[i][j] * Hb[j][i];
      Ax[i] += Ha[i][j] * x[j];
      Bx[i] += Hb[i][j] * x[j];
    }
  for (int i = 0; i < d_; ++i) {
    xABx += Ax[i] * Bx[i];
    xAx += x[i] * Ax[i];
    xBx += x[i] * Bx[i];
  }
  MultiPoly Ea = euler(a, d_), Eb = euler(b, d_);
  MultiPoly trPA = laplacian(a, d_) - xAx, trPB = laplacian(b, d_) - xBx;
  return trAB - Rational(2) * xABx + xAx * xBx - Eb * trPA - Ea * trPB + Rational(n_) * (Ea * Eb);
}

}  // namespace gjms6
