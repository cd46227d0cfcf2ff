#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "occlearn/cnf.hpp"
#include "occlearn/ltlf.hpp"
#include "occlearn/run_stats.hpp"
#include "occlearn/sample.hpp"
#include "occlearn/solver.hpp"

namespace occlearn {

/// Symbolic-word length bound for the semi-symbolic learner.
struct HorizonConfig {
  std::uint32_t k = 8;
};

/// Operators available to the syntax-DAG search (atoms are always included).
std::vector<LtlfOp> default_operator_set();

/// Variable grids for one m-node syntax-DAG encoding. x[i,lab] labels node i,
/// l/r wire children (j < i, node m is the root); y grids valuate candidate
/// subformulas on concrete words, the p/z grids on one symbolic word.
class LtlfVarLayout {
 public:
  LtlfVarLayout(std::uint32_t m, const Alphabet& sigma,
                std::vector<LtlfOp> ops);

  std::uint32_t m() const { return m_; }
  const Alphabet& alphabet() const { return *sigma_; }
  const std::vector<LtlfOp>& operators() const { return ops_; }
  std::size_t num_labels() const { return sigma_->size() + ops_.size(); }

  Var x_atom(std::uint32_t i, SymbolId a) const {
    return x_[(i - 1) * num_labels() + a];
  }
  Var x_op(std::uint32_t i, std::size_t op_index) const {
    return x_[(i - 1) * num_labels() + sigma_->size() + op_index];
  }
  Var l(std::uint32_t i, std::uint32_t j) const {
    return lr_[lr_base(i)][j - 1];
  }
  Var r(std::uint32_t i, std::uint32_t j) const {
    return lr_[lr_base(i) + 1][j - 1];
  }
  Var y(const Word& w, std::uint32_t i, std::size_t t) const {
    return y_.at(w)[(i - 1) * w.length() + (t - 1)];
  }
  std::uint32_t horizon() const { return k_; }
  Var p(std::size_t t, SymbolId a) const {  // a == |sigma| means epsilon
    return p_[(t - 1) * (sigma_->size() + 1) + a];
  }
  Var p_eps(std::size_t t) const {
    return p(t, static_cast<SymbolId>(sigma_->size()));
  }
  Var z_candidate(std::uint32_t i, std::size_t t) const {
    return zc_[(i - 1) * k_ + (t - 1)];
  }
  Var z_hypothesis(std::uint32_t i, std::size_t t) const {
    return zh_[(i - 1) * k_ + (t - 1)];
  }

  LtlfFormula decode(const Model& model) const;
  /// The symbolic word read off the p grid (positions before the first
  /// epsilon); only valid after encode_separation.
  Word decode_witness(const Model& model) const;

 private:
  std::size_t lr_base(std::uint32_t i) const { return 2 * (i - 2); }

  friend LtlfVarLayout encode_syntax(CnfProblem& cnf, std::uint32_t m,
                                     const Alphabet& sigma,
                                     std::vector<LtlfOp> ops);
  friend void encode_word_semantics(CnfProblem& cnf, LtlfVarLayout& layout,
                                    const Word& w, bool accept);
  friend void encode_symbolic_word(CnfProblem& cnf, LtlfVarLayout& layout,
                                   std::uint32_t k);
  friend void encode_separation(CnfProblem& cnf, LtlfVarLayout& layout,
                                const LtlfFormula& phi, std::uint32_t k);

  std::uint32_t m_;
  const Alphabet* sigma_;
  std::vector<LtlfOp> ops_;
  std::vector<Var> x_;
  std::vector<std::vector<Var>> lr_;  // [2*(i-2)] = l row, [2*(i-2)+1] = r row
  std::map<Word, std::vector<Var>> y_;
  std::uint32_t k_ = 0;
  std::vector<Var> p_;
  std::vector<Var> zc_;
  std::vector<Var> zh_;
  CanonicalDag hypothesis_;  // fixed side of the separation constraint
};

/// Well-formed syntax DAG of m nodes: one label per node, one left/right
/// child (with smaller id) per non-leaf slot, node 1 is an atom, and no two
/// nodes carry the same label and children.
LtlfVarLayout encode_syntax(CnfProblem& cnf, std::uint32_t m,
                            const Alphabet& sigma,
                            std::vector<LtlfOp> ops = default_operator_set());

/// y[i,t] equals the valuation of subformula i on suffix w[t..]; the root
/// valuation at position 1 is asserted with the given polarity.
void encode_word_semantics(CnfProblem& cnf, LtlfVarLayout& layout,
                           const Word& w, bool accept);

/// One symbol from sigma or epsilon per position; epsilon positions form a
/// suffix, so models are exactly the words of length 0..k.
void encode_symbolic_word(CnfProblem& cnf, LtlfVarLayout& layout,
                          std::uint32_t k);

/// Nonempty word u of length <= k with phi true and the candidate false on u.
void encode_separation(CnfProblem& cnf, LtlfVarLayout& layout,
                       const LtlfFormula& phi, std::uint32_t k);

/// No model decodes to a syntax DAG structurally identical to a member of d.
void encode_blocking(CnfProblem& cnf, LtlfVarLayout& layout,
                     const std::vector<CanonicalDag>& d);

struct LtlfLearnResult {
  LtlfFormula formula;
  RunStats stats;
};

/// Semi-symbolic learner: candidates must beat the current hypothesis on a
/// symbolic word of length <= horizon.k; the implication check itself is
/// exact. Result accepts every positive within the size bound; minimality is
/// relative to the horizon (no bounded-witness refinement remains).
LtlfLearnResult learn_ssym_ltlf(const Sample& s, const LearnConfig& cfg,
                                HorizonConfig horizon = {},
                                std::vector<LtlfOp> ops = default_operator_set());

/// Counterexample-guided learner with exact (automata-based) separations and
/// syntactic blocking of equivalent rediscoveries; result is language-minimal
/// within the size bound on normal termination.
LtlfLearnResult learn_ceg_ltlf(const Sample& s, const LearnConfig& cfg,
                               std::vector<LtlfOp> ops = default_operator_set());

}  // namespace occlearn
