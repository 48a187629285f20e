// Serial reference driver vs OpenMP driver on the exhaustive checks.
//
//   bench_verify [--max-order N] [--jobs K] [--repeat R]

#include <algorithm>
#include <chrono>
#include <cstdio>

#include <CLI11.hpp>

#include "ultratree/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ultratree;

namespace {

double best_of(int repeat, const VerifyOptions& options, Theorem theorem, VerificationReport& last) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    last = verify(theorem, options);
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel verification timing"};
  int max_order = 6;
  int jobs = 0;
  int repeat = 3;
  app.add_option("--max-order", max_order)->capture_default_str();
  app.add_option("--jobs", jobs, "0 = OpenMP default")->capture_default_str();
  app.add_option("--repeat", repeat)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", jobs > 0 ? jobs : omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel driver runs serially\n");
#endif
  std::printf("%-10s %14s %12s %12s %8s %s\n", "theorem", "cases", "serial ms", "parallel ms", "speedup", "agree");

  int mismatches = 0;
  for (Theorem t : {Theorem::Nondegeneracy, Theorem::Main, Theorem::Lemmas, Theorem::Classification}) {
    VerifyOptions options;
    options.max_order = max_order;
    options.allow_large = true;
    options.jobs = jobs;

    VerificationReport serial_report, parallel_report;
    options.execution = Execution::Serial;
    const double serial_ms = best_of(repeat, options, t, serial_report);
    options.execution = Execution::Parallel;
    const double parallel_ms = best_of(repeat, options, t, parallel_report);

    const bool agree = serial_report.cases_checked == parallel_report.cases_checked &&
                       serial_report.subchecks == parallel_report.subchecks &&
                       serial_report.failures.size() == parallel_report.failures.size();
    mismatches += !agree;
    std::printf("%-10s %14llu %12.1f %12.1f %7.2fx %s\n", std::string(theorem_id(t)).c_str(),
                static_cast<unsigned long long>(serial_report.cases_checked), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree ? "yes" : "NO");
  }
  return mismatches == 0 ? 0 : 1;
}
