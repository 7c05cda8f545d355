#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kronlab/io.hpp"

namespace kronlab {

struct RunConfig {
  long level = 1;
  std::string character = "auto";
  int qprec = 30;
  int kmax = 14;
  int deg = 14;
  std::optional<double> tol;
  bool bigfloat = false;
  unsigned seed = 1;
  std::string out;
  std::string mode;
};

Json config_json(const RunConfig& cfg);

// "trivial", an index into enumerate_characters(N), or "auto":
// trivial at N = 1, otherwise the first even primitive character.
DirichletCharacter select_character(long N, const std::string& selector);
// Also requires square-free N and an even primitive character.
DirichletCharacter select_identity_character(long N, const std::string& selector);

struct CheckResult {
  std::string name;
  bool pass = false;
  Json detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
  Json to_json() const;
};

// Suites: expansions, modular, elliptic, cusp-limits, identity, periods.
SuiteReport run_suite(const std::string& suite, const RunConfig& cfg);

// Periods of a newform f of level chi.modulus(), the functional-equation residuals and,
// for nontrivial chi, the twisted periods with their residuals. "pass" summarizes.
Json cusp_period_report(const QSeries& f, int k, const DirichletCharacter& chi, double tol, bool bigfloat);

Json sample_check(const Json& point, const std::complex<double>& lhs, const std::complex<double>& rhs, double tol);

}  // namespace kronlab
