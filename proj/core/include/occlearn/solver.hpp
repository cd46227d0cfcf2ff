#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "occlearn/cnf.hpp"

namespace occlearn {

/// Total assignment over all allocated variables.
class Model {
 public:
  explicit Model(std::vector<bool> values) : values_(std::move(values)) {}

  bool value(Var v) const { return values_.at(v - 1); }
  std::size_t num_vars() const { return values_.size(); }

 private:
  std::vector<bool> values_;  // values_[v-1] holds variable v
};

enum class SolveStatus { Sat, Unsat, TimedOut };

struct SolveResult {
  SolveStatus status;
  std::optional<Model> model;  // present iff Sat
  std::chrono::duration<double> elapsed{0};

  bool sat() const { return status == SolveStatus::Sat; }
  bool unsat() const { return status == SolveStatus::Unsat; }
  bool timed_out() const { return status == SolveStatus::TimedOut; }
};

struct SolverConfig {
  /// When set, CNF is written to a temp file and this executable is invoked
  /// on it; it must print SAT-competition output ("s SATISFIABLE" plus "v"
  /// lines). Otherwise the built-in CDCL solver is used.
  std::optional<std::string> external_path;
  std::uint64_t seed = 0;
  std::optional<std::chrono::duration<double>> budget;
};

/// Decides the problem within the configured budget. A solver-process
/// failure raises Error; it is never reported as Unsat.
SolveResult solve(const CnfProblem& problem, const SolverConfig& config = {});

/// Checks a model against every clause; used by the decode audits.
bool satisfies(const CnfProblem& problem, const Model& model);

}  // namespace occlearn
