#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ballgreen/quadrature.hpp"

namespace ballgreen::checks {

enum class Profile { Fast, Thorough };
Profile profile_from_name(const std::string& name);
std::string profile_name(Profile p);

struct CheckResult {
  std::string name;
  int dimension = 0;  // 0 for dimension-independent checks
  double computed = 0.0;
  double expected = 0.0;
  std::string provenance;  // closed form | derived oracle | trivial identity
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  std::string metric = "rel";  // rel | abs | count
  bool passed = false;
  long runtime_ms = 0;
  quad::QuadratureSpec spec_echo;
  std::string detail;
};

struct CheckDef {
  std::string name;
  bool per_dimension = true;
  // minimum dimension constraint (0 = none); checks like the matrix duality
  // only run at n = 3
  int only_dimension = 0;
  std::function<std::vector<CheckResult>(int dim, const quad::QuadratureSpec&, Profile)> run;
};

const std::vector<CheckDef>& registry();
std::vector<std::string> registry_names();

// Verified-statement manifest: maps each statement the toolkit certifies to
// the checks exercising it (the conjecture is exploratory and exempt).
const std::map<std::string, std::vector<std::string>>& statement_manifest();

std::vector<CheckResult> run_check(const std::string& name, const std::vector<int>& dims,
                                   const quad::QuadratureSpec& spec, Profile profile);

struct RunReport {
  std::vector<CheckResult> results;
  std::vector<int> dims;
  Profile profile = Profile::Fast;
  quad::QuadratureSpec spec;
  int workers = 1;
  long runtime_ms = 0;
  int total = 0;
  int passed_count = 0;
  int failed_count = 0;
};

// Executes the full registry. A failing check never aborts the run; failures
// are recorded results. Checks run on up to `workers` threads and results
// are collected in registry order.
RunReport run_all(const std::vector<int>& dims, Profile profile,
                  const quad::QuadratureSpec& spec, int workers = 1);

}  // namespace ballgreen::checks
