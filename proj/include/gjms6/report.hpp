#pragma once

#include <string>

namespace gjms6 {

struct CheckReport {
  std::string name;
  bool pass = false;
  double residual = 0;  // max abs (or relative, as noted in detail)
  std::string detail;
};

}  // namespace gjms6
