#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "occlearn/cnf.hpp"
#include "occlearn/dfa.hpp"
#include "occlearn/run_stats.hpp"
#include "occlearn/sample.hpp"
#include "occlearn/solver.hpp"

namespace occlearn {

/// Variable grids for one m-state hypothesis encoding. d[p,a,q] selects the
/// transition target, f[q] marks final states; the x/y/z grids are allocated
/// on demand by the encoding passes below.
class DfaVarLayout {
 public:
  DfaVarLayout(std::uint32_t m, const Alphabet& sigma)
      : m_(m), sigma_(&sigma) {}

  std::uint32_t m() const { return m_; }
  const Alphabet& alphabet() const { return *sigma_; }

  Var d(State p, SymbolId a, State q) const {
    return d_[((p - 1) * sigma_->size() + a) * m_ + (q - 1)];
  }
  Var f(State q) const { return f_[q - 1]; }
  bool has_x(const Word& u) const { return x_.count(u) > 0; }
  Var x(const Word& u, State q) const { return x_.at(u)[q - 1]; }
  Var y(State q, State qa) const { return y_[(q - 1) * na_ + (qa - 1)]; }
  Var z(std::size_t i, State q, State qa) const {
    return z_[(i * m_ + (q - 1)) * na_ + (qa - 1)];
  }

  Dfa decode(const Model& model) const;

 private:
  friend DfaVarLayout encode_structure(CnfProblem& cnf, std::uint32_t m,
                                       const Alphabet& sigma);
  friend void encode_positive(CnfProblem& cnf, DfaVarLayout& layout,
                              const std::set<Word>& pos);
  friend void encode_negative(CnfProblem& cnf, DfaVarLayout& layout,
                              const std::set<Word>& neg);
  friend void encode_subset(CnfProblem& cnf, DfaVarLayout& layout,
                            const Dfa& a);
  friend void encode_strictness(CnfProblem& cnf, DfaVarLayout& layout,
                                const Dfa& a);

  void ensure_prefix_run(CnfProblem& cnf, const Word& u);

  std::uint32_t m_;
  const Alphabet* sigma_;
  std::vector<Var> d_;
  std::vector<Var> f_;
  std::map<Word, std::vector<Var>> x_;  // shared by positives and negatives
  std::uint32_t na_ = 0;                // states of the reference automaton
  std::vector<Var> y_;
  std::vector<Var> z_;
  std::vector<Var> sel_;  // witness layer selectors for strictness
};

/// Allocates d/f and forces a total deterministic transition function:
/// exactly-one d[p,a,q] over q for each (p,a).
DfaVarLayout encode_structure(CnfProblem& cnf, std::uint32_t m,
                              const Alphabet& sigma);

/// Every decoded DFA accepts all of `pos` (run-tracking x grid over prefixes,
/// shared with encode_negative, plus final-state units at each word).
void encode_positive(CnfProblem& cnf, DfaVarLayout& layout,
                     const std::set<Word>& pos);

/// Every decoded DFA rejects all of `neg`.
void encode_negative(CnfProblem& cnf, DfaVarLayout& layout,
                     const std::set<Word>& neg);

/// Every decoded DFA's language is a subset of L(a): y grid tracks reachable
/// product states, final hypothesis states may not pair with non-final a-states.
void encode_subset(CnfProblem& cnf, DfaVarLayout& layout, const Dfa& a);

/// Every decoded DFA rejects some word of L(a) with length at most m^2:
/// a symbolic synchronized run (z grid, one product pair per layer) must pass,
/// at some selected layer, through a pair that a accepts and the hypothesis
/// does not.
void encode_strictness(CnfProblem& cnf, DfaVarLayout& layout, const Dfa& a);

struct DfaLearnResult {
  Dfa dfa;
  RunStats stats;
};

/// Fully symbolic learner: iterates SAT queries whose subset and strictness
/// constraints are both encoded against the previous hypothesis. On normal
/// termination the result accepts every positive, has at most size_bound
/// states, and no DFA within the bound accepts every positive with a strictly
/// smaller language.
DfaLearnResult learn_sym_dfa(const Sample& s, const LearnConfig& cfg);

/// Counterexample-guided baseline: plain positive/negative queries; subset
/// and strictness are checked on decoded hypotheses and repaired by adding
/// separating words to the negative set.
DfaLearnResult learn_ceg_dfa(const Sample& s, const LearnConfig& cfg);

/// Semi-symbolic: strictness stays in the encoding, the subset check is
/// counterexample-guided.
DfaLearnResult learn_ssym_dfa(const Sample& s, const LearnConfig& cfg);

}  // namespace occlearn
