#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "occlearn/solver.hpp"

namespace occlearn {

enum class TerminationReason { Minimal, SizeExhausted, Timeout };
std::string to_string(TerminationReason r);

/// Telemetry for one learning run; feeds the benchmark CSV.
struct RunStats {
  std::uint32_t iterations = 0;        // main-loop passes
  std::uint32_t solver_calls = 0;
  std::uint32_t counterexamples = 0;   // words added to P' or N
  std::vector<double> iteration_seconds;
  std::uint32_t final_size = 0;        // states (or DAG nodes) of the result
  TerminationReason reason = TerminationReason::Minimal;
};

struct LearnConfig {
  std::uint32_t size_bound = 1;
  SolverConfig solver;  // seed and per-call budget
  std::optional<std::chrono::duration<double>> total_budget;
  std::uint32_t max_iterations = 100000;
  bool debug = false;        // per-iteration audits
  std::string debug_dir;     // when non-empty: DIMACS + DOT dumps per iteration
};

}  // namespace occlearn
