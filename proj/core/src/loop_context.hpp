#pragma once

// Shared bookkeeping for the learner driver loops: wall-clock budgets,
// telemetry, and the per-iteration debug dumps.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <string>

#include "occlearn/cnf.hpp"
#include "occlearn/run_stats.hpp"

namespace occlearn::detail {

using Clock = std::chrono::steady_clock;

struct LoopContext {
  const LearnConfig& cfg;
  RunStats stats;
  std::optional<Clock::time_point> deadline;

  explicit LoopContext(const LearnConfig& cfg_) : cfg(cfg_) {
    if (cfg.total_budget)
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    *cfg.total_budget);
  }

  bool out_of_time() const { return deadline && Clock::now() >= *deadline; }

  SolverConfig solver_config() const {
    SolverConfig sc = cfg.solver;
    // vary the decision seed per call so successive hypotheses are not
    // artificially correlated; deterministic for a fixed base seed
    sc.seed = cfg.solver.seed + 0x9e3779b97f4a7c15ull * (stats.solver_calls + 1);
    if (deadline) {
      auto remaining = std::chrono::duration<double>(*deadline - Clock::now());
      if (!sc.budget || *sc.budget > remaining) sc.budget = remaining;
    }
    return sc;
  }

  void dump(const CnfProblem& cnf, const std::string& hypothesis_dot) {
    if (cfg.debug_dir.empty()) return;
    std::filesystem::create_directories(cfg.debug_dir);
    std::string base =
        cfg.debug_dir + "/iter" + std::to_string(stats.iterations);
    std::ofstream dimacs(base + ".cnf");
    cnf.emit_dimacs(dimacs, true);
    if (!hypothesis_dot.empty()) {
      std::ofstream dot(base + ".dot");
      dot << hypothesis_dot;
    }
  }
};

}  // namespace occlearn::detail
