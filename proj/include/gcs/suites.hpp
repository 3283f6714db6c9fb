#pragma once

// Declarative invariant suites over the library, with machine-readable
// reports. Trials within a suite are independent and may run in parallel;
// per-trial seeds are derived as seed + trial index, so threading never
// changes the numbers.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcs/serialization.hpp"

namespace gcs {

struct SuiteConfig {
  std::string suite = "all";  // gc-check, brackets, flows, torus, reduce,
                              // so3-demo, all
  AlgebraKind kind = AlgebraKind::unitary(3);
  int trials = 20;
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances;  // overrides of named defaults
  std::vector<ProductSpace> spaces;          // reduce suite; defaults built in
  bool parallel = true;
};

SuiteConfig config_from_json(const Json& j);
Json to_json(const SuiteConfig& cfg);

struct InvariantResult {
  std::string name;
  double tolerance = 0.0;
  double worst = 0.0;
  bool pass = false;
  std::vector<double> trial_defects;
  std::string error;  // first exception message, if any trial threw
};

struct SuiteReport {
  int schema_version = 1;
  std::string suite;
  bool passed = false;
  std::vector<InvariantResult> invariants;
  double wall_time_s = 0.0;
  Json config_echo;
};

Json to_json(const SuiteReport& rep);
std::string to_csv(const SuiteReport& rep);

// Runs the named suite (or every suite for "all"). Deterministic for a
// fixed config and seed.
SuiteReport run_suite(const SuiteConfig& cfg);

// Human-readable summary; failed invariants are annotated with the
// mathematical statement they instantiate.
std::string explain(const SuiteReport& rep);

std::vector<std::string> known_suites();

}  // namespace gcs
