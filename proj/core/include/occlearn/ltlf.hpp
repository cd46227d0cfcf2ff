#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "occlearn/alphabet.hpp"
#include "occlearn/dfa.hpp"
#include "occlearn/word.hpp"

namespace occlearn {

enum class LtlfOp : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  Or,
  And,
  Implies,
  Next,
  Until,
  Finally,
  Globally,
};

bool is_unary(LtlfOp op);
bool is_binary(LtlfOp op);
bool is_temporal(LtlfOp op);
std::string op_token(LtlfOp op);

using NodeId = std::uint32_t;
constexpr NodeId kNoNode = 0;

struct LtlfNode {
  LtlfOp op;
  SymbolId atom = 0;       // for Atom
  NodeId left = kNoNode;   // operand / left operand
  NodeId right = kNoNode;  // right operand
};

/// Append-only hash-consing arena. Structurally identical nodes are interned
/// to the same id, so node counts equal unique-subformula counts.
class FormulaFactory {
 public:
  explicit FormulaFactory(Alphabet sigma) : sigma_(std::move(sigma)) {}

  const Alphabet& alphabet() const { return sigma_; }
  const LtlfNode& node(NodeId id) const { return nodes_.at(id - 1); }
  std::size_t num_nodes() const { return nodes_.size(); }

  NodeId truth(bool b) { return intern({b ? LtlfOp::True : LtlfOp::False}); }
  NodeId atom(SymbolId a);
  NodeId mk_unary(LtlfOp op, NodeId operand);
  NodeId mk_binary(LtlfOp op, NodeId l, NodeId r);

  // simplifying constructors used by formula progression; these fold
  // constants and flatten double negation, so they must not be used where
  // the exact syntax DAG matters
  NodeId simp_not(NodeId a);
  NodeId simp_or(NodeId a, NodeId b);
  NodeId simp_and(NodeId a, NodeId b);
  NodeId simp_implies(NodeId a, NodeId b);

 private:
  NodeId intern(LtlfNode n);

  Alphabet sigma_;
  std::vector<LtlfNode> nodes_;
  struct NodeKeyHash {
    std::size_t operator()(const LtlfNode& n) const;
  };
  struct NodeKeyEq {
    bool operator()(const LtlfNode& a, const LtlfNode& b) const;
  };
  std::unordered_map<LtlfNode, NodeId, NodeKeyHash, NodeKeyEq> interned_;
};

/// Canonical numbered syntax DAG of the subgraph reachable from a root:
/// ids 1..k, every parent id larger than its children, deterministic
/// (post-order, left child first). Equality is structural identity.
struct CanonicalDag {
  struct Node {
    LtlfOp op;
    SymbolId atom = 0;
    std::uint32_t left = 0;   // 1-based ids within the DAG, 0 = none
    std::uint32_t right = 0;
  };
  std::vector<Node> nodes;  // nodes[i] has id i+1; root is nodes.back()

  std::size_t size() const { return nodes.size(); }
  friend bool operator==(const CanonicalDag& a, const CanonicalDag& b);
};

/// Immutable formula handle: a shared arena plus a root node.
class LtlfFormula {
 public:
  LtlfFormula(std::shared_ptr<FormulaFactory> factory, NodeId root)
      : factory_(std::move(factory)), root_(root) {}

  const FormulaFactory& factory() const { return *factory_; }
  const Alphabet& alphabet() const { return factory_->alphabet(); }
  NodeId root() const { return root_; }

  /// Number of unique subformulas reachable from the root.
  std::size_t size() const;

  CanonicalDag canonical_dag() const;

  /// Rebuilds this formula inside another arena.
  NodeId import_into(FormulaFactory& target) const;

 private:
  std::shared_ptr<FormulaFactory> factory_;
  NodeId root_;
};

/// w,t |= phi with 1-based positions; satisfaction of w means t = 1.
/// Throws on the empty word (finite-word semantics is undefined there).
bool evaluate(const LtlfFormula& phi, const Word& w, std::size_t t);

inline bool satisfies(const Word& w, const LtlfFormula& phi) {
  return evaluate(phi, w, 1);
}

/// Operators: ! | & -> X U F G, atoms are alphabet names, plus true/false.
/// Precedence (tightest first): unary, U, &, |, ->.
LtlfFormula parse_formula(const std::string& text, const Alphabet& sigma);
std::string print_formula(const LtlfFormula& phi);
LtlfFormula formula_from_dag(const CanonicalDag& dag, const Alphabet& sigma);

std::string emit_dot(const LtlfFormula& phi);

/// Compiles via formula progression. The language is {w : |w| >= 1, w |= phi};
/// the empty word is never accepted.
Dfa to_dfa(const LtlfFormula& phi, const Alphabet& sigma);

bool implies(const LtlfFormula& phi, const LtlfFormula& psi);
bool equivalent(const LtlfFormula& phi, const LtlfFormula& psi);

/// Shortest word with w |= phi and w |/= psi; absent iff implies(phi, psi).
std::optional<Word> witness(const LtlfFormula& phi, const LtlfFormula& psi);

}  // namespace occlearn
