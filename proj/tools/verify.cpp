// Command-line front end for the invariant suites.
//
//   verify run --suite all --seed 1 --out report.json
//   verify run --suite reduce --config cfg.json --trials 50
//   verify list
//
// `run` writes a JSON report (and a CSV summary alongside it when --out is
// given) and exits nonzero if any invariant fails.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gcs/suites.hpp"

namespace {

gcs::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gcs::ConfigError("cannot open config file '" + path + "'");
  try {
    return gcs::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw gcs::ConfigError("config file '" + path + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant verification for the eigenvalue-ladder toolkit"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list the available suites");

  auto* run = app.add_subcommand("run", "run a suite and write a report");
  std::string suite = "all";
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  int trials = 0;
  int n = 0;
  bool serial = false;
  run->add_option("--suite", suite, "suite name (see `verify list`)");
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--seed", seed, "base RNG seed (overrides config)");
  run->add_option("--out", out_path, "report path; a .csv summary is written alongside");
  run->add_option("--trials", trials, "trials per invariant (overrides config)");
  run->add_option("--n", n, "matrix size for the unitary backend (overrides config)");
  run->add_flag("--serial", serial, "disable trial-level parallelism");

  CLI11_PARSE(app, argc, argv);

  if (*list) {
    for (const auto& name : gcs::known_suites()) std::cout << name << "\n";
    return 0;
  }

  try {
    gcs::SuiteConfig cfg;
    if (!config_path.empty()) cfg = gcs::config_from_json(load_json(config_path));
    if (run->count("--suite") || config_path.empty()) cfg.suite = suite;
    if (run->count("--seed")) cfg.seed = seed;
    if (run->count("--trials")) cfg.trials = trials;
    if (run->count("--n")) cfg.kind = gcs::AlgebraKind::unitary(n);
    if (serial) cfg.parallel = false;

    const gcs::SuiteReport rep = gcs::run_suite(cfg);
    const gcs::Json j = gcs::to_json(rep);

    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw gcs::ConfigError("cannot open output file '" + out_path + "'");
      out << j.dump(2) << "\n";
      std::filesystem::path csv_path(out_path);
      csv_path.replace_extension(".csv");
      std::ofstream csv(csv_path);
      csv << gcs::to_csv(rep);
    } else {
      std::cout << j.dump(2) << "\n";
    }

    std::cerr << gcs::explain(rep);
    return rep.passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
