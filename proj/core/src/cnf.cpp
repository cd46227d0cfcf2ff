#include "occlearn/cnf.hpp"

#include <ostream>

namespace occlearn {

void CnfProblem::emit_dimacs(std::ostream& out, bool with_tags) const {
  if (with_tags) {
    for (Var v = 1; v <= pool_.num_vars(); ++v)
      if (const std::string* t = pool_.tag(v)) out << "c var " << v << " " << *t << "\n";
  }
  out << "p cnf " << pool_.num_vars() << " " << clauses_.size() << "\n";
  for (const Clause& c : clauses_) {
    for (Lit l : c) out << l << " ";
    out << "0\n";
  }
}

void exactly_one(CnfProblem& problem, const std::vector<Var>& vars) {
  if (vars.empty()) throw Error("exactly_one over empty variable list");
  Clause at_least;
  at_least.reserve(vars.size());
  for (Var v : vars) at_least.push_back(static_cast<Lit>(v));
  problem.add_clause(std::move(at_least));
  at_most_one(problem, vars);
}

void at_most_one(CnfProblem& problem, const std::vector<Var>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      problem.add_clause({-static_cast<Lit>(vars[i]), -static_cast<Lit>(vars[j])});
}

}  // namespace occlearn
