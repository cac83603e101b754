#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace gjms6 {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string suite = "all";  // covariance, symmetry, dtn, trace, critical, all
  std::string geometry;       // empty: the suite's default (all: every geometry)
  int n = 7;
  int lmax = 32;
  int grid = 256;
  double tol = 1e-6;
  unsigned seed = 1;
  std::string out;
  bool timing = false;  // runtime_ms in the report; off keeps reports byte-identical
};

void validate(const RunConfig& cfg);  // throws ConfigError

struct CheckRecord {
  std::string id;
  std::string tag;  // which statement the check exercises
  bool pass = false;
  bool exact = false;
  std::string residual;  // "p/q" when exact, decimal otherwise
  double tolerance = 0;
  double runtime_ms = 0;
  std::string detail;
};

struct CsvSeries {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct SuiteReport {
  RunConfig config;
  std::vector<CheckRecord> checks;
  std::map<std::string, CsvSeries> series;  // gap_vs_epsilon, multiplier_table
  int passed() const;
  int failed() const;
  nlohmann::ordered_json to_json() const;
};

SuiteReport run_suite(const RunConfig& cfg);
void write_report(const SuiteReport& r, const std::string& path);
// throws std::invalid_argument if the report lacks the series
void emit_csv(const SuiteReport& r, const std::string& what, std::ostream& os);

std::string decimal(double v);

}  // namespace gjms6
