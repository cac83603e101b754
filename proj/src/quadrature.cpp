#include "gjms6/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gjms6 {

namespace {

const QuadRule& reference_rule(int N) {
  static std::map<int, QuadRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  QuadRule r;
  // legendre_p_zeros returns the non-negative zeros, ascending
  std::vector<double> pos = boost::math::legendre_p_zeros<double>(N);
  for (auto it2 = pos.rbegin(); it2 != pos.rend(); ++it2)
    if (*it2 != 0) r.x.push_back(-*it2);
  for (double z : pos) r.x.push_back(z);
  for (double z : r.x) {
    double dp = boost::math::legendre_p_prime(N, z);
    r.w.push_back(2 / ((1 - z * z) * dp * dp));
  }
  return cache.emplace(N, std::move(r)).first->second;
}

}  // namespace

QuadRule gauss_legendre(int N, double a, double b) {
  if (N < 1) throw std::invalid_argument("gauss_legendre: N >= 1");
  const QuadRule& ref = reference_rule(N);
  QuadRule r;
  double h = (b - a) / 2, m = (b + a) / 2;
  for (std::size_t i = 0; i < ref.x.size(); ++i) {
    r.x.push_back(m + h * ref.x[i]);
    r.w.push_back(h * ref.w[i]);
  }
  return r;
}

}  // namespace gjms6
