#pragma once

#include <vector>

namespace gjms6 {

struct QuadRule {
  std::vector<double> x, w;
};

// N-point Gauss-Legendre rule mapped to [a, b]; nodes cached per N
QuadRule gauss_legendre(int N, double a = -1, double b = 1);

}  // namespace gjms6
