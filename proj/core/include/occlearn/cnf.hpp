#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "occlearn/error.hpp"

namespace occlearn {

using Var = std::uint32_t;
using Lit = std::int32_t;  // +v / -v, DIMACS style

/// Dense variable allocator; ids start at 1 and are never reused. Tags are
/// optional human-readable names used by the debug dumps.
class VarPool {
 public:
  Var fresh() { return next_id_++; }

  Var fresh(std::string tag) {
    Var v = next_id_++;
    tags_.emplace(v, std::move(tag));
    return v;
  }

  Var num_vars() const { return next_id_ - 1; }

  const std::string* tag(Var v) const {
    auto it = tags_.find(v);
    return it == tags_.end() ? nullptr : &it->second;
  }

 private:
  Var next_id_ = 1;
  std::unordered_map<Var, std::string> tags_;
};

using Clause = std::vector<Lit>;

class CnfProblem {
 public:
  VarPool& pool() { return pool_; }
  const VarPool& pool() const { return pool_; }

  void add_clause(Clause clause) {
    if (clause.empty()) throw Error("empty clause");
    for (Lit l : clause) {
      Var v = static_cast<Var>(l > 0 ? l : -l);
      if (v == 0 || v > pool_.num_vars())
        throw Error("literal over unallocated variable");
    }
    clauses_.push_back(std::move(clause));
  }

  void add_unit(Lit l) { add_clause({l}); }

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t num_clauses() const { return clauses_.size(); }

  /// Records a preferred initial branching polarity for a variable. Solvers
  /// may use these as decision hints; they never affect satisfiability.
  void suggest_phase(Var v, bool value) { phase_hints_.emplace_back(v, value); }
  const std::vector<std::pair<Var, bool>>& phase_hints() const {
    return phase_hints_;
  }

  /// DIMACS CNF text with the standard "p cnf <vars> <clauses>" header.
  void emit_dimacs(std::ostream& out, bool with_tags = false) const;

 private:
  VarPool pool_;
  std::vector<Clause> clauses_;
  std::vector<std::pair<Var, bool>> phase_hints_;
};

/// Appends one at-least-one clause and all pairwise at-most-one clauses.
void exactly_one(CnfProblem& problem, const std::vector<Var>& vars);

/// At-most-one alone (pairwise), used where at-least-one comes from elsewhere.
void at_most_one(CnfProblem& problem, const std::vector<Var>& vars);

}  // namespace occlearn
