#include <doctest.h>

#include <functional>

#include "occlearn/ltlf.hpp"
#include "occlearn/ltlf_learn.hpp"
#include "occlearn/oracle.hpp"

using namespace occlearn;

namespace {

const Alphabet kAB({"a", "b"});

Word w(std::vector<SymbolId> syms) { return Word(std::move(syms)); }

LtlfFormula parse(const std::string& text) {
  return parse_formula(text, kAB);
}

// Second, independent finite-trace evaluator: direct recursion over the
// textbook semantics, no sharing, no memoization. Used to cross-check the
// library's evaluator.
bool naive_eval(const LtlfFormula& phi, NodeId id, const Word& u,
                std::size_t t) {
  const LtlfNode& n = phi.factory().node(id);
  switch (n.op) {
    case LtlfOp::True: return true;
    case LtlfOp::False: return false;
    case LtlfOp::Atom: return u.at(t) == n.atom;
    case LtlfOp::Not: return !naive_eval(phi, n.left, u, t);
    case LtlfOp::Or:
      return naive_eval(phi, n.left, u, t) || naive_eval(phi, n.right, u, t);
    case LtlfOp::And:
      return naive_eval(phi, n.left, u, t) && naive_eval(phi, n.right, u, t);
    case LtlfOp::Implies:
      return !naive_eval(phi, n.left, u, t) || naive_eval(phi, n.right, u, t);
    case LtlfOp::Next:
      return t + 1 <= u.length() && naive_eval(phi, n.left, u, t + 1);
    case LtlfOp::Until:
      for (std::size_t j = t; j <= u.length(); ++j) {
        if (naive_eval(phi, n.right, u, j)) return true;
        if (!naive_eval(phi, n.left, u, j)) return false;
      }
      return false;
    case LtlfOp::Finally:
      for (std::size_t j = t; j <= u.length(); ++j)
        if (naive_eval(phi, n.left, u, j)) return true;
      return false;
    case LtlfOp::Globally:
      for (std::size_t j = t; j <= u.length(); ++j)
        if (!naive_eval(phi, n.left, u, j)) return false;
      return true;
  }
  return false;
}

bool naive_sat(const Word& u, const LtlfFormula& phi) {
  return naive_eval(phi, phi.root(), u, 1);
}

std::vector<Word> all_words(std::size_t min_len, std::size_t max_len) {
  std::vector<Word> out;
  std::function<void(Word, std::size_t)> rec = [&](Word u, std::size_t left) {
    if (u.length() >= min_len) out.push_back(u);
    if (left == 0) return;
    for (SymbolId s = 0; s < kAB.size(); ++s) rec(u.append(s), left - 1);
  };
  rec(Word(), max_len);
  return out;
}

}  // namespace

TEST_CASE("parser handles precedence and associativity") {
  CHECK(print_formula(parse("a U b & a | b -> a")) ==
        print_formula(parse("(((a U b) & a) | b) -> a")));
  CHECK(print_formula(parse("a U b U a")) ==
        print_formula(parse("a U (b U a)")));
  CHECK(print_formula(parse("!F a")) == print_formula(parse("!(F a)")));
  CHECK(print_formula(parse("G a -> b")) == print_formula(parse("(G a) -> b")));
}

TEST_CASE("print/parse round-trips structurally") {
  for (const char* text :
       {"G !a", "F (a & (F b))", "(F b) -> (!a U b)", "X (a | b)",
        "true U b", "!(a -> false)", "G (a -> (G b))"}) {
    LtlfFormula phi = parse(text);
    LtlfFormula again = parse(print_formula(phi));
    CHECK(phi.canonical_dag() == again.canonical_dag());
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse("a U"), Error);
  CHECK_THROWS_AS(parse("(a"), Error);
  CHECK_THROWS_AS(parse("c"), Error);  // unknown atom
  CHECK_THROWS_AS(parse(""), Error);
  CHECK_THROWS_AS(parse("a b"), Error);
}

TEST_CASE("size counts unique subformulas") {
  CHECK(parse("a").size() == 1);
  CHECK(parse("a | a").size() == 2);  // shared leaf
  CHECK(parse("a U b").size() == 3);
  CHECK(parse("(a & b) | (a & b)").size() == 4);
}

TEST_CASE("evaluation matches hand-computed cases") {
  CHECK(satisfies(w({0}), parse("a")));
  CHECK(!satisfies(w({1}), parse("a")));
  CHECK(satisfies(w({1, 0}), parse("F a")));
  CHECK(!satisfies(w({1, 1}), parse("F a")));
  CHECK(satisfies(w({0, 0}), parse("G a")));
  CHECK(!satisfies(w({0, 1}), parse("G a")));
  CHECK(satisfies(w({0, 0, 1}), parse("a U b")));
  CHECK(!satisfies(w({0, 0}), parse("a U b")));
  CHECK(satisfies(w({0, 1}), parse("X b")));
  CHECK(!satisfies(w({0}), parse("X b")));   // no next position
  CHECK(!satisfies(w({0}), parse("X true")));
  CHECK_THROWS_AS(satisfies(Word(), parse("a")), Error);
}

TEST_CASE("evaluator agrees with the naive recursive evaluator") {
  auto formulas = enumerate_formulas(3, kAB, default_operator_set());
  auto words = all_words(1, 4);
  CHECK(formulas.size() > 50);
  for (const auto& phi : formulas)
    for (const Word& u : words)
      CHECK(satisfies(u, phi) == naive_sat(u, phi));
}

TEST_CASE("to_dfa agrees with evaluation on short words") {
  for (const char* text :
       {"G !b", "F a", "G a", "a U b", "(F b) -> (!a U b)", "X (X a)",
        "G (b -> (G a))", "(G !a) | (F (a & (F b)))"}) {
    LtlfFormula phi = parse(text);
    Dfa d = to_dfa(phi, kAB);
    CHECK(!d.accepts(Word()));  // empty word is never in an LTLf language
    for (const Word& u : all_words(1, 6))
      CHECK(d.accepts(u) == satisfies(u, phi));
  }
}

TEST_CASE("progression compiles G !b to three states") {
  CHECK(to_dfa(parse("G !b"), kAB).num_states() == 3);
}

TEST_CASE("implication, equivalence, and witnesses") {
  CHECK(implies(parse("G a"), parse("F a")));
  CHECK(!implies(parse("F a"), parse("G a")));
  CHECK(equivalent(parse("F a"), parse("true U a")));
  CHECK(equivalent(parse("!(F a)"), parse("G !a")));
  auto u = witness(parse("F a"), parse("G a"));
  REQUIRE(u.has_value());
  CHECK(satisfies(*u, parse("F a")));
  CHECK(!satisfies(*u, parse("G a")));
  CHECK(!witness(parse("G a"), parse("F a")).has_value());
}

TEST_CASE("canonical DAG is order-stable and import round-trips") {
  LtlfFormula phi = parse("(F b) -> (!a U b)");
  CanonicalDag dag = phi.canonical_dag();
  CHECK(dag.size() == phi.size());
  // children precede parents
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    CHECK(dag.nodes[i].left <= i);   // ids are 1-based: child id <= parent index
    CHECK(dag.nodes[i].right <= i);
  }
  LtlfFormula back = formula_from_dag(dag, kAB);
  CHECK(back.canonical_dag() == dag);
  CHECK(equivalent(phi, back));
}

TEST_CASE("formula enumeration is structurally deduplicated") {
  auto formulas = enumerate_formulas(2, kAB, {LtlfOp::Not, LtlfOp::Finally});
  // size 1: a, b ; size 2: !a, !b, F a, F b
  CHECK(formulas.size() == 6);
  for (std::size_t i = 0; i < formulas.size(); ++i)
    for (std::size_t j = i + 1; j < formulas.size(); ++j)
      CHECK(!(formulas[i].canonical_dag() == formulas[j].canonical_dag()));
}
