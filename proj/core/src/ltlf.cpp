#include "occlearn/ltlf.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include "occlearn/error.hpp"

namespace occlearn {

bool is_unary(LtlfOp op) {
  switch (op) {
    case LtlfOp::Not:
    case LtlfOp::Next:
    case LtlfOp::Finally:
    case LtlfOp::Globally:
      return true;
    default:
      return false;
  }
}

bool is_binary(LtlfOp op) {
  switch (op) {
    case LtlfOp::Or:
    case LtlfOp::And:
    case LtlfOp::Implies:
    case LtlfOp::Until:
      return true;
    default:
      return false;
  }
}

bool is_temporal(LtlfOp op) {
  switch (op) {
    case LtlfOp::Next:
    case LtlfOp::Until:
    case LtlfOp::Finally:
    case LtlfOp::Globally:
      return true;
    default:
      return false;
  }
}

std::string op_token(LtlfOp op) {
  switch (op) {
    case LtlfOp::True: return "true";
    case LtlfOp::False: return "false";
    case LtlfOp::Atom: return "<atom>";
    case LtlfOp::Not: return "!";
    case LtlfOp::Or: return "|";
    case LtlfOp::And: return "&";
    case LtlfOp::Implies: return "->";
    case LtlfOp::Next: return "X";
    case LtlfOp::Until: return "U";
    case LtlfOp::Finally: return "F";
    case LtlfOp::Globally: return "G";
  }
  return "?";
}

std::size_t FormulaFactory::NodeKeyHash::operator()(const LtlfNode& n) const {
  std::size_t h = static_cast<std::size_t>(n.op);
  h = h * 1000003 + n.atom;
  h = h * 1000003 + n.left;
  h = h * 1000003 + n.right;
  return h;
}

bool FormulaFactory::NodeKeyEq::operator()(const LtlfNode& a,
                                           const LtlfNode& b) const {
  return a.op == b.op && a.atom == b.atom && a.left == b.left && a.right == b.right;
}

NodeId FormulaFactory::intern(LtlfNode n) {
  auto it = interned_.find(n);
  if (it != interned_.end()) return it->second;
  nodes_.push_back(n);
  NodeId id = static_cast<NodeId>(nodes_.size());
  interned_.emplace(n, id);
  return id;
}

NodeId FormulaFactory::atom(SymbolId a) {
  if (a >= sigma_.size()) throw Error("atom outside the alphabet");
  return intern({LtlfOp::Atom, a});
}

NodeId FormulaFactory::mk_unary(LtlfOp op, NodeId operand) {
  if (!is_unary(op)) throw Error("mk_unary with non-unary operator");
  return intern({op, 0, operand});
}

NodeId FormulaFactory::mk_binary(LtlfOp op, NodeId l, NodeId r) {
  if (!is_binary(op)) throw Error("mk_binary with non-binary operator");
  return intern({op, 0, l, r});
}

NodeId FormulaFactory::simp_not(NodeId a) {
  const LtlfNode& n = node(a);
  if (n.op == LtlfOp::True) return truth(false);
  if (n.op == LtlfOp::False) return truth(true);
  if (n.op == LtlfOp::Not) return n.left;
  return mk_unary(LtlfOp::Not, a);
}

NodeId FormulaFactory::simp_or(NodeId a, NodeId b) {
  const LtlfNode& na = node(a);
  const LtlfNode& nb = node(b);
  if (na.op == LtlfOp::True || nb.op == LtlfOp::True) return truth(true);
  if (na.op == LtlfOp::False) return b;
  if (nb.op == LtlfOp::False) return a;
  if (a == b) return a;
  if ((na.op == LtlfOp::Not && na.left == b) ||
      (nb.op == LtlfOp::Not && nb.left == a))
    return truth(true);
  if (a > b) std::swap(a, b);
  return mk_binary(LtlfOp::Or, a, b);
}

NodeId FormulaFactory::simp_and(NodeId a, NodeId b) {
  const LtlfNode& na = node(a);
  const LtlfNode& nb = node(b);
  if (na.op == LtlfOp::False || nb.op == LtlfOp::False) return truth(false);
  if (na.op == LtlfOp::True) return b;
  if (nb.op == LtlfOp::True) return a;
  if (a == b) return a;
  if ((na.op == LtlfOp::Not && na.left == b) ||
      (nb.op == LtlfOp::Not && nb.left == a))
    return truth(false);
  if (a > b) std::swap(a, b);
  return mk_binary(LtlfOp::And, a, b);
}

NodeId FormulaFactory::simp_implies(NodeId a, NodeId b) {
  return simp_or(simp_not(a), b);
}

bool operator==(const CanonicalDag& a, const CanonicalDag& b) {
  if (a.nodes.size() != b.nodes.size()) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const auto& x = a.nodes[i];
    const auto& y = b.nodes[i];
    if (x.op != y.op || x.atom != y.atom || x.left != y.left || x.right != y.right)
      return false;
  }
  return true;
}

std::size_t LtlfFormula::size() const {
  return canonical_dag().size();
}

CanonicalDag LtlfFormula::canonical_dag() const {
  CanonicalDag dag;
  std::unordered_map<NodeId, std::uint32_t> ids;
  // post-order, left child first: every parent gets a larger id
  std::vector<std::pair<NodeId, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (ids.count(id)) continue;
    const LtlfNode& n = factory_->node(id);
    if (!expanded) {
      stack.push_back({id, true});
      if (n.right != kNoNode) stack.push_back({n.right, false});
      if (n.left != kNoNode) stack.push_back({n.left, false});
    } else {
      CanonicalDag::Node out{n.op, n.atom, 0, 0};
      if (n.left != kNoNode) out.left = ids.at(n.left);
      if (n.right != kNoNode) out.right = ids.at(n.right);
      dag.nodes.push_back(out);
      ids.emplace(id, static_cast<std::uint32_t>(dag.nodes.size()));
    }
  }
  return dag;
}

NodeId LtlfFormula::import_into(FormulaFactory& target) const {
  CanonicalDag dag = canonical_dag();
  std::vector<NodeId> ids(dag.nodes.size() + 1, kNoNode);
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const auto& n = dag.nodes[i];
    NodeId id;
    switch (n.op) {
      case LtlfOp::True:
      case LtlfOp::False:
        id = target.truth(n.op == LtlfOp::True);
        break;
      case LtlfOp::Atom:
        id = target.atom(n.atom);
        break;
      default:
        if (is_unary(n.op)) id = target.mk_unary(n.op, ids[n.left]);
        else id = target.mk_binary(n.op, ids[n.left], ids[n.right]);
    }
    ids[i + 1] = id;
  }
  return ids[dag.nodes.size()];
}

LtlfFormula formula_from_dag(const CanonicalDag& dag, const Alphabet& sigma) {
  auto factory = std::make_shared<FormulaFactory>(sigma);
  std::vector<NodeId> ids(dag.nodes.size() + 1, kNoNode);
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const auto& n = dag.nodes[i];
    NodeId id;
    switch (n.op) {
      case LtlfOp::True:
      case LtlfOp::False:
        id = factory->truth(n.op == LtlfOp::True);
        break;
      case LtlfOp::Atom:
        id = factory->atom(n.atom);
        break;
      default:
        if (is_unary(n.op)) id = factory->mk_unary(n.op, ids[n.left]);
        else id = factory->mk_binary(n.op, ids[n.left], ids[n.right]);
    }
    ids[i + 1] = id;
  }
  if (dag.nodes.empty()) throw Error("empty syntax DAG");
  return LtlfFormula(factory, ids[dag.nodes.size()]);
}

// ---------------------------------------------------------------------------
// semantics

namespace {

bool evaluate_node(const FormulaFactory& f, NodeId id, const Word& w,
                   std::size_t t, std::map<std::pair<NodeId, std::size_t>, bool>& memo) {
  auto key = std::make_pair(id, t);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const LtlfNode& n = f.node(id);
  bool v = false;
  switch (n.op) {
    case LtlfOp::True: v = true; break;
    case LtlfOp::False: v = false; break;
    case LtlfOp::Atom: v = w.at(t) == n.atom; break;
    case LtlfOp::Not: v = !evaluate_node(f, n.left, w, t, memo); break;
    case LtlfOp::Or:
      v = evaluate_node(f, n.left, w, t, memo) ||
          evaluate_node(f, n.right, w, t, memo);
      break;
    case LtlfOp::And:
      v = evaluate_node(f, n.left, w, t, memo) &&
          evaluate_node(f, n.right, w, t, memo);
      break;
    case LtlfOp::Implies:
      v = !evaluate_node(f, n.left, w, t, memo) ||
          evaluate_node(f, n.right, w, t, memo);
      break;
    case LtlfOp::Next:
      v = t < w.length() && evaluate_node(f, n.left, w, t + 1, memo);
      break;
    case LtlfOp::Until:
      for (std::size_t j = t; j <= w.length(); ++j) {
        if (evaluate_node(f, n.right, w, j, memo)) {
          v = true;
          break;
        }
        if (!evaluate_node(f, n.left, w, j, memo)) break;
      }
      break;
    case LtlfOp::Finally:
      for (std::size_t j = t; j <= w.length(); ++j)
        if (evaluate_node(f, n.left, w, j, memo)) {
          v = true;
          break;
        }
      break;
    case LtlfOp::Globally:
      v = true;
      for (std::size_t j = t; j <= w.length(); ++j)
        if (!evaluate_node(f, n.left, w, j, memo)) {
          v = false;
          break;
        }
      break;
  }
  memo.emplace(key, v);
  return v;
}

}  // namespace

bool evaluate(const LtlfFormula& phi, const Word& w, std::size_t t) {
  if (w.empty()) throw Error("LTLf satisfaction is undefined on the empty word");
  if (t < 1 || t > w.length()) throw Error("position out of range");
  std::map<std::pair<NodeId, std::size_t>, bool> memo;
  return evaluate_node(phi.factory(), phi.root(), w, t, memo);
}

// ---------------------------------------------------------------------------
// parsing and printing

namespace {

struct Token {
  enum Kind { Ident, Bang, AndTok, OrTok, Arrow, LPar, RPar, XTok, UTok, FTok, GTok, End };
  Kind kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '!') { out.push_back({Token::Bang, "!"}); ++i; continue; }
    if (c == '&') { out.push_back({Token::AndTok, "&"}); ++i; continue; }
    if (c == '|') { out.push_back({Token::OrTok, "|"}); ++i; continue; }
    if (c == '(') { out.push_back({Token::LPar, "("}); ++i; continue; }
    if (c == ')') { out.push_back({Token::RPar, ")"}); ++i; continue; }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::Arrow, "->"});
      i += 2;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word = s.substr(i, j - i);
      if (word == "X") out.push_back({Token::XTok, word});
      else if (word == "U") out.push_back({Token::UTok, word});
      else if (word == "F") out.push_back({Token::FTok, word});
      else if (word == "G") out.push_back({Token::GTok, word});
      else out.push_back({Token::Ident, word});
      i = j;
      continue;
    }
    throw Error(std::string("unexpected character '") + c + "' in formula");
  }
  out.push_back({Token::End, ""});
  return out;
}

class FormulaParser {
 public:
  FormulaParser(std::vector<Token> tokens, FormulaFactory& factory)
      : tokens_(std::move(tokens)), factory_(factory) {}

  NodeId parse() {
    NodeId id = parse_implies();
    if (peek().kind != Token::End) throw Error("trailing input after formula");
    return id;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  bool eat(Token::Kind k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodeId parse_implies() {
    NodeId l = parse_or();
    if (eat(Token::Arrow)) return factory_.mk_binary(LtlfOp::Implies, l, parse_implies());
    return l;
  }
  NodeId parse_or() {
    NodeId l = parse_and();
    while (eat(Token::OrTok)) l = factory_.mk_binary(LtlfOp::Or, l, parse_and());
    return l;
  }
  NodeId parse_and() {
    NodeId l = parse_until();
    while (eat(Token::AndTok)) l = factory_.mk_binary(LtlfOp::And, l, parse_until());
    return l;
  }
  NodeId parse_until() {
    NodeId l = parse_unary();
    if (eat(Token::UTok)) return factory_.mk_binary(LtlfOp::Until, l, parse_until());
    return l;
  }
  NodeId parse_unary() {
    if (eat(Token::Bang)) return factory_.mk_unary(LtlfOp::Not, parse_unary());
    if (eat(Token::XTok)) return factory_.mk_unary(LtlfOp::Next, parse_unary());
    if (eat(Token::FTok)) return factory_.mk_unary(LtlfOp::Finally, parse_unary());
    if (eat(Token::GTok)) return factory_.mk_unary(LtlfOp::Globally, parse_unary());
    return parse_primary();
  }
  NodeId parse_primary() {
    Token t = next();
    if (t.kind == Token::LPar) {
      NodeId id = parse_implies();
      if (!eat(Token::RPar)) throw Error("missing ')'");
      return id;
    }
    if (t.kind == Token::Ident) {
      if (t.text == "true") return factory_.truth(true);
      if (t.text == "false") return factory_.truth(false);
      auto id = factory_.alphabet().id_of(t.text);
      if (!id) throw Error("unknown atom '" + t.text + "'");
      return factory_.atom(*id);
    }
    if (t.kind == Token::End) throw Error("unexpected end of formula");
    throw Error("unexpected token '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  FormulaFactory& factory_;
  std::size_t pos_ = 0;
};

int precedence(LtlfOp op) {
  switch (op) {
    case LtlfOp::Implies: return 1;
    case LtlfOp::Or: return 2;
    case LtlfOp::And: return 3;
    case LtlfOp::Until: return 4;
    default: return 5;  // unary operators and leaves
  }
}

void print_node(const FormulaFactory& f, NodeId id, int parent_prec,
                std::string& out) {
  const LtlfNode& n = f.node(id);
  int prec = precedence(n.op);
  bool parens = prec < parent_prec;
  if (parens) out += "(";
  switch (n.op) {
    case LtlfOp::True: out += "true"; break;
    case LtlfOp::False: out += "false"; break;
    case LtlfOp::Atom: out += f.alphabet().name(n.atom); break;
    case LtlfOp::Not:
    case LtlfOp::Next:
    case LtlfOp::Finally:
    case LtlfOp::Globally:
      out += op_token(n.op);
      if (n.op != LtlfOp::Not) out += " ";
      print_node(f, n.left, prec, out);
      break;
    default:
      // binary; right-associative chains reproduce without parens
      print_node(f, n.left, prec + 1, out);
      out += " " + op_token(n.op) + " ";
      print_node(f, n.right, prec, out);
  }
  if (parens) out += ")";
}

}  // namespace

LtlfFormula parse_formula(const std::string& text, const Alphabet& sigma) {
  auto factory = std::make_shared<FormulaFactory>(sigma);
  FormulaParser parser(tokenize(text), *factory);
  NodeId root = parser.parse();
  return LtlfFormula(factory, root);
}

std::string print_formula(const LtlfFormula& phi) {
  std::string out;
  print_node(phi.factory(), phi.root(), 0, out);
  return out;
}

std::string emit_dot(const LtlfFormula& phi) {
  CanonicalDag dag = phi.canonical_dag();
  std::ostringstream out;
  out << "digraph ltlf {\n";
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const auto& n = dag.nodes[i];
    std::string label = n.op == LtlfOp::Atom
                            ? phi.alphabet().name(n.atom)
                            : op_token(n.op);
    out << "  n" << (i + 1) << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const auto& n = dag.nodes[i];
    if (n.left) out << "  n" << (i + 1) << " -> n" << n.left << ";\n";
    if (n.right) out << "  n" << (i + 1) << " -> n" << n.right << ";\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// compilation to DFA by formula progression

namespace {

class ProgressionCompiler {
 public:
  ProgressionCompiler(const LtlfFormula& phi, const Alphabet& sigma)
      : factory_(sigma), sigma_(sigma) {
    if (!(phi.alphabet() == sigma))
      throw Error("formula alphabet differs from requested alphabet");
    root_ = phi.import_into(factory_);
    nonempty_ = factory_.mk_binary(LtlfOp::Until, factory_.truth(true),
                                   factory_.truth(true));
  }

  Dfa compile() {
    // initial residual: formula holds and the word is nonempty
    NodeId init = factory_.simp_and(root_, nonempty_);
    std::vector<NodeId> states;
    std::map<std::string, State> by_sig;
    auto state_of = [&](NodeId r) {
      std::string sig = signature(r);
      auto it = by_sig.find(sig);
      if (it != by_sig.end()) return it->second;
      states.push_back(r);
      State q = static_cast<State>(states.size());
      by_sig.emplace(std::move(sig), q);
      return q;
    };
    state_of(init);
    std::vector<std::vector<State>> delta;
    for (std::size_t qi = 0; qi < states.size(); ++qi) {
      std::vector<State> row;
      for (SymbolId a = 0; a < sigma_.size(); ++a)
        row.push_back(state_of(progress(states[qi], a)));
      delta.push_back(std::move(row));
    }
    std::set<State> finals;
    for (std::size_t qi = 0; qi < states.size(); ++qi)
      if (eval_end(states[qi])) finals.insert(static_cast<State>(qi + 1));
    return Dfa(static_cast<std::uint32_t>(states.size()), sigma_,
               std::move(delta), std::move(finals));
  }

 private:
  // one-step rewrite: residual after consuming symbol a
  NodeId progress(NodeId id, SymbolId a) {
    auto key = std::make_pair(id, a);
    auto it = prog_memo_.find(key);
    if (it != prog_memo_.end()) return it->second;
    const LtlfNode n = factory_.node(id);
    NodeId out;
    switch (n.op) {
      case LtlfOp::True:
      case LtlfOp::False:
        out = id;
        break;
      case LtlfOp::Atom:
        out = factory_.truth(n.atom == a);
        break;
      case LtlfOp::Not:
        out = factory_.simp_not(progress(n.left, a));
        break;
      case LtlfOp::Or:
        out = factory_.simp_or(progress(n.left, a), progress(n.right, a));
        break;
      case LtlfOp::And:
        out = factory_.simp_and(progress(n.left, a), progress(n.right, a));
        break;
      case LtlfOp::Implies:
        out = factory_.simp_implies(progress(n.left, a), progress(n.right, a));
        break;
      case LtlfOp::Next:
        // strong next: the remaining suffix must be nonempty
        out = factory_.simp_and(n.left, nonempty_);
        break;
      case LtlfOp::Until:
        out = factory_.simp_or(progress(n.right, a),
                               factory_.simp_and(progress(n.left, a), id));
        break;
      case LtlfOp::Finally:
        out = factory_.simp_or(progress(n.left, a), id);
        break;
      case LtlfOp::Globally:
        out = factory_.simp_and(progress(n.left, a), id);
        break;
      default:
        throw Error("unreachable");
    }
    prog_memo_.emplace(key, out);
    return out;
  }

  // value of a residual once the word has ended
  bool eval_end(NodeId id) {
    auto it = end_memo_.find(id);
    if (it != end_memo_.end()) return it->second;
    const LtlfNode n = factory_.node(id);
    bool v;
    switch (n.op) {
      case LtlfOp::True: v = true; break;
      case LtlfOp::False: v = false; break;
      case LtlfOp::Atom: v = false; break;
      case LtlfOp::Not: v = !eval_end(n.left); break;
      case LtlfOp::Or: v = eval_end(n.left) || eval_end(n.right); break;
      case LtlfOp::And: v = eval_end(n.left) && eval_end(n.right); break;
      case LtlfOp::Implies: v = !eval_end(n.left) || eval_end(n.right); break;
      case LtlfOp::Next: v = false; break;
      case LtlfOp::Until: v = false; break;
      case LtlfOp::Finally: v = false; break;
      case LtlfOp::Globally: v = true; break;
      default: throw Error("unreachable");
    }
    end_memo_.emplace(id, v);
    return v;
  }

  // opaque leaves of the residual's Boolean skeleton: atoms plus temporal nodes
  void collect_opaque(NodeId id, std::vector<NodeId>& out,
                      std::set<NodeId>& seen) {
    if (seen.count(id)) return;
    seen.insert(id);
    const LtlfNode& n = factory_.node(id);
    switch (n.op) {
      case LtlfOp::True:
      case LtlfOp::False:
        return;
      case LtlfOp::Not:
        collect_opaque(n.left, out, seen);
        return;
      case LtlfOp::Or:
      case LtlfOp::And:
      case LtlfOp::Implies:
        collect_opaque(n.left, out, seen);
        collect_opaque(n.right, out, seen);
        return;
      default:
        out.push_back(id);  // Atom / Next / Until / Finally / Globally
    }
  }

  bool eval_skeleton(NodeId id, const std::map<NodeId, bool>& vals) {
    auto it = vals.find(id);
    if (it != vals.end()) return it->second;
    const LtlfNode& n = factory_.node(id);
    switch (n.op) {
      case LtlfOp::True: return true;
      case LtlfOp::False: return false;
      case LtlfOp::Not: return !eval_skeleton(n.left, vals);
      case LtlfOp::Or:
        return eval_skeleton(n.left, vals) || eval_skeleton(n.right, vals);
      case LtlfOp::And:
        return eval_skeleton(n.left, vals) && eval_skeleton(n.right, vals);
      case LtlfOp::Implies:
        return !eval_skeleton(n.left, vals) || eval_skeleton(n.right, vals);
      default:
        throw Error("unreachable");
    }
  }

  // Semantic state signature: end-of-word value plus the residual's truth
  // table over (next symbol choice x free temporal-subformula bits).
  // Equal signatures imply equal residual languages, so merging is sound;
  // termination follows from the finite subformula closure.
  std::string signature(NodeId id) {
    std::vector<NodeId> opaque;
    std::set<NodeId> seen;
    collect_opaque(id, opaque, seen);
    std::sort(opaque.begin(), opaque.end());
    std::vector<NodeId> temporal;
    for (NodeId o : opaque)
      if (factory_.node(o).op != LtlfOp::Atom) temporal.push_back(o);
    if (temporal.size() > 20)
      throw Error("progression state too large to canonicalize");

    std::string sig;
    for (NodeId o : opaque) sig += std::to_string(o) + ",";
    sig += ";";
    sig += eval_end(id) ? '1' : '0';
    for (SymbolId a = 0; a < sigma_.size(); ++a) {
      for (std::uint64_t mask = 0; mask < (1ull << temporal.size()); ++mask) {
        std::map<NodeId, bool> vals;
        for (NodeId o : opaque) {
          const LtlfNode& n = factory_.node(o);
          if (n.op == LtlfOp::Atom) vals[o] = n.atom == a;
        }
        for (std::size_t k = 0; k < temporal.size(); ++k)
          vals[temporal[k]] = (mask >> k) & 1;
        sig += eval_skeleton(id, vals) ? '1' : '0';
      }
    }
    return sig;
  }

  FormulaFactory factory_;
  Alphabet sigma_;
  NodeId root_;
  NodeId nonempty_;
  std::map<std::pair<NodeId, SymbolId>, NodeId> prog_memo_;
  std::map<NodeId, bool> end_memo_;
};

void check_same_alphabet(const LtlfFormula& a, const LtlfFormula& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw Error("formulas are over different alphabets");
}

}  // namespace

Dfa to_dfa(const LtlfFormula& phi, const Alphabet& sigma) {
  return ProgressionCompiler(phi, sigma).compile();
}

bool implies(const LtlfFormula& phi, const LtlfFormula& psi) {
  check_same_alphabet(phi, psi);
  return is_subset(to_dfa(phi, phi.alphabet()), to_dfa(psi, psi.alphabet()));
}

bool equivalent(const LtlfFormula& phi, const LtlfFormula& psi) {
  return implies(phi, psi) && implies(psi, phi);
}

std::optional<Word> witness(const LtlfFormula& phi, const LtlfFormula& psi) {
  check_same_alphabet(phi, psi);
  return shortest_separating_word(to_dfa(phi, phi.alphabet()),
                                  to_dfa(psi, psi.alphabet()));
}

}  // namespace occlearn
