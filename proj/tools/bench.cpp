// Compares serial and parallel suite execution and checks that both produce
// identical reports (trials are seeded independently, so threading must not
// change any number).

#include <iostream>

#include <CLI11.hpp>

#include "gcs/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel suite benchmark"};
  std::string suite = "all";
  int trials = 40;
  std::uint64_t seed = 1;
  app.add_option("--suite", suite, "suite to benchmark");
  app.add_option("--trials", trials, "trials per invariant");
  app.add_option("--seed", seed, "base RNG seed");
  CLI11_PARSE(app, argc, argv);

  gcs::SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = trials;
  cfg.seed = seed;

  cfg.parallel = false;
  const gcs::SuiteReport serial = gcs::run_suite(cfg);
  cfg.parallel = true;
  const gcs::SuiteReport parallel = gcs::run_suite(cfg);

  auto strip = [](const gcs::SuiteReport& r) {
    gcs::Json j = gcs::to_json(r);
    j.erase("wall_time_s");
    j["config"].erase("parallel");  // the only field that legitimately differs
    return j;
  };
  const bool identical = strip(serial) == strip(parallel);

  std::cout << "suite " << suite << ", " << trials << " trials\n"
            << "  serial:   " << serial.wall_time_s << " s\n"
            << "  parallel: " << parallel.wall_time_s << " s\n"
            << "  speedup:  " << serial.wall_time_s / parallel.wall_time_s << "x\n"
            << "  reports identical: " << (identical ? "yes" : "NO") << "\n";
  return identical ? 0 : 1;
}
