#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gjms6/cli_report.hpp"

using namespace gjms6;

int main(int argc, char** argv) {
  CLI::App app{"gjms6: exact and numerical checks for the sixth-order boundary problem"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string csv, csv_out;
  for (const char* s : {"covariance", "symmetry", "dtn", "trace", "critical", "all"}) {
    CLI::App* sub = app.add_subcommand(s, std::string("run the ") + s + " suite");
    sub->add_option("--geometry", cfg.geometry, "halfspace, ball, hemisphere or hyperbolic");
    sub->add_option("--n", cfg.n, "dimension of the interior")->capture_default_str();
    sub->add_option("--lmax", cfg.lmax, "spherical-harmonic cutoff")->capture_default_str();
    sub->add_option("--grid", cfg.grid, "Gauss-Legendre nodes")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "tolerance for numerical checks")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--out", cfg.out, "write the JSON report here (default stdout)");
    sub->add_flag("--timing", cfg.timing, "include runtime_ms per check");
    sub->add_option("--csv", csv, "series to emit: gap_vs_epsilon or multiplier_table");
    sub->add_option("--csv-out", csv_out, "CSV destination (default stdout)");
    sub->callback([&cfg, s] { cfg.suite = s; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  SuiteReport rep;
  try {
    rep = run_suite(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "gjms6: " << e.what() << "\n";
    return 2;
  }
  try {
    if (cfg.out.empty())
      std::cout << rep.to_json().dump(2) << "\n";
    else
      write_report(rep, cfg.out);
    if (!csv.empty()) {
      if (csv_out.empty()) {
        emit_csv(rep, csv, std::cout);
      } else {
        std::ofstream os(csv_out);
        if (!os) throw std::runtime_error("cannot open " + csv_out);
        emit_csv(rep, csv, os);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "gjms6: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gjms6: " << e.what() << "\n";
    return 1;
  }
  std::cerr << rep.passed() << "/" << rep.checks.size() << " checks passed\n";
  return rep.failed() == 0 ? 0 : 1;
}
