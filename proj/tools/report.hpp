#pragma once

// Benchmark/statistics rows shared by the learn and bench commands.

#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "occlearn/run_stats.hpp"

namespace occlearn::cli {

struct BenchRow {
  std::string instance;
  std::string algorithm;
  std::uint32_t model_size = 0;
  std::uint32_t iterations = 0;
  std::uint32_t solver_calls = 0;
  double wall_time_s = 0;
  std::uint32_t counterexamples = 0;
  std::string termination;
  std::string oracle;  // pass | fail | skipped
};

inline const char* kCsvHeader =
    "instance,algorithm,model_size,iterations,solver_calls,wall_time_s,"
    "counterexamples,termination,oracle";

inline void write_csv_row(std::ostream& out, const BenchRow& r) {
  out << r.instance << ',' << r.algorithm << ',' << r.model_size << ','
      << r.iterations << ',' << r.solver_calls << ',' << r.wall_time_s << ','
      << r.counterexamples << ',' << r.termination << ',' << r.oracle << '\n';
}

inline BenchRow row_from_stats(const std::string& instance,
                               const std::string& algorithm,
                               const RunStats& stats) {
  BenchRow r;
  r.instance = instance;
  r.algorithm = algorithm;
  r.model_size = stats.final_size;
  r.iterations = stats.iterations;
  r.solver_calls = stats.solver_calls;
  r.wall_time_s = std::accumulate(stats.iteration_seconds.begin(),
                                  stats.iteration_seconds.end(), 0.0);
  r.counterexamples = stats.counterexamples;
  r.termination = to_string(stats.reason);
  r.oracle = "skipped";
  return r;
}

}  // namespace occlearn::cli
