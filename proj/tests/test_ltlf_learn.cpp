#include <doctest.h>

#include <functional>

#include "occlearn/ltlf_learn.hpp"
#include "occlearn/oracle.hpp"

using namespace occlearn;

namespace {

const Alphabet kAB({"a", "b"});

Word w(std::vector<SymbolId> syms) { return Word(std::move(syms)); }

LearnConfig cfg_n(std::uint32_t n) {
  LearnConfig cfg;
  cfg.size_bound = n;
  cfg.debug = true;
  return cfg;
}

std::set<Word> words_satisfying(const LtlfFormula& phi, std::size_t max_len) {
  std::set<Word> out;
  std::function<void(Word, std::size_t)> rec = [&](Word u, std::size_t left) {
    if (!u.empty() && satisfies(u, phi)) out.insert(u);
    if (left == 0) return;
    for (SymbolId s = 0; s < kAB.size(); ++s) rec(u.append(s), left - 1);
  };
  rec(Word(), max_len);
  return out;
}

}  // namespace

TEST_CASE("syntax encoding decodes to well-formed formulas only") {
  CnfProblem cnf;
  LtlfVarLayout layout = encode_syntax(cnf, 3, kAB);
  SolveResult res = solve(cnf);
  REQUIRE(res.sat());
  LtlfFormula phi = layout.decode(*res.model);
  CHECK(phi.size() <= 3);
  CHECK(phi.size() >= 1);
}

TEST_CASE("word semantics pin the root valuation") {
  CnfProblem cnf;
  LtlfVarLayout layout = encode_syntax(cnf, 2, kAB);
  encode_word_semantics(cnf, layout, w({0, 0}), true);
  encode_word_semantics(cnf, layout, w({1, 0}), false);
  SolveResult res = solve(cnf);
  REQUIRE(res.sat());
  LtlfFormula phi = layout.decode(*res.model);
  CHECK(satisfies(w({0, 0}), phi));
  CHECK(!satisfies(w({1, 0}), phi));
}

TEST_CASE("word semantics reject the empty word") {
  CnfProblem cnf;
  LtlfVarLayout layout = encode_syntax(cnf, 2, kAB);
  CHECK_THROWS_AS(encode_word_semantics(cnf, layout, Word(), true), Error);
}

TEST_CASE("separation produces a nonempty bounded witness") {
  // candidate must beat F a within horizon 4; plain "a" qualifies with
  // witness words like "ba"
  LtlfFormula best = parse_formula("F a", kAB);
  CnfProblem cnf;
  LtlfVarLayout layout = encode_syntax(cnf, 2, kAB);
  encode_word_semantics(cnf, layout, w({0}), true);
  encode_separation(cnf, layout, best, 4);
  SolveResult res = solve(cnf);
  REQUIRE(res.sat());
  LtlfFormula cand = layout.decode(*res.model);
  Word u = layout.decode_witness(*res.model);
  CHECK(u.length() >= 1);
  CHECK(u.length() <= 4);
  CHECK(satisfies(u, best));
  CHECK(!satisfies(u, cand));
}

TEST_CASE("blocking removes exactly the listed syntax DAGs") {
  std::vector<CanonicalDag> blocked;
  for (int round = 0; round < 6; ++round) {
    CnfProblem cnf;
    LtlfVarLayout layout = encode_syntax(cnf, 1, kAB);
    encode_blocking(cnf, layout, blocked);
    SolveResult res = solve(cnf);
    if (res.unsat()) {
      // only two size-1 formulas exist over a binary alphabet
      CHECK(blocked.size() == 2);
      return;
    }
    LtlfFormula phi = layout.decode(*res.model);
    for (const CanonicalDag& d : blocked)
      CHECK(!(phi.canonical_dag() == d));
    blocked.push_back(phi.canonical_dag());
  }
  FAIL("blocking never exhausted the two size-1 formulas");
}

TEST_CASE("both learners recover simple temporal patterns") {
  for (const char* text : {"G a", "F b", "G !b"}) {
    LtlfFormula target = parse_formula(text, kAB);
    Sample s{kAB, words_satisfying(target, 5)};
    REQUIRE(!s.positives.empty());
    for (bool ssym : {true, false}) {
      CAPTURE(text);
      CAPTURE(ssym);
      LtlfLearnResult res = ssym
                                ? learn_ssym_ltlf(s, cfg_n(2), {6})
                                : learn_ceg_ltlf(s, cfg_n(2));
      CHECK(res.formula.size() <= 2);
      for (const Word& u : s.positives) CHECK(satisfies(u, res.formula));
      CHECK(equivalent(res.formula, target));
    }
  }
}

TEST_CASE("learned formulas are oracle-minimal within the bound") {
  LtlfFormula target = parse_formula("a U b", kAB);
  Sample s{kAB, words_satisfying(target, 5)};
  for (bool ssym : {true, false}) {
    CAPTURE(ssym);
    LtlfLearnResult res = ssym ? learn_ssym_ltlf(s, cfg_n(3), {6})
                               : learn_ceg_ltlf(s, cfg_n(3));
    for (const Word& u : s.positives) CHECK(satisfies(u, res.formula));
    auto stricter =
        find_stricter_formula(res.formula, s, 3, default_operator_set());
    CHECK(!stricter.has_value());
  }
}

TEST_CASE("the empty word is rejected up front") {
  Sample s{kAB, {Word(), w({0})}};
  CHECK_THROWS_AS(learn_ceg_ltlf(s, cfg_n(2)), Error);
  CHECK_THROWS_AS(learn_ssym_ltlf(s, cfg_n(2)), Error);
}

TEST_CASE("learning is deterministic in the seed") {
  Sample s{kAB, words_satisfying(parse_formula("F a", kAB), 4)};
  for (bool ssym : {true, false}) {
    CAPTURE(ssym);
    LearnConfig cfg = cfg_n(2);
    cfg.solver.seed = 23;
    LtlfLearnResult a = ssym ? learn_ssym_ltlf(s, cfg, {5})
                             : learn_ceg_ltlf(s, cfg);
    LtlfLearnResult b = ssym ? learn_ssym_ltlf(s, cfg, {5})
                             : learn_ceg_ltlf(s, cfg);
    CHECK(a.formula.canonical_dag() == b.formula.canonical_dag());
    CHECK(a.stats.iterations == b.stats.iterations);
    CHECK(a.stats.solver_calls == b.stats.solver_calls);
  }
}

TEST_CASE("timeout surfaces as a partial result") {
  Sample s{kAB, words_satisfying(parse_formula("F a", kAB), 4)};
  LearnConfig cfg = cfg_n(3);
  cfg.total_budget = std::chrono::duration<double>(0.0);
  LtlfLearnResult res = learn_ceg_ltlf(s, cfg);
  CHECK(res.stats.reason == TerminationReason::Timeout);
}

TEST_CASE("restricted operator sets are honored") {
  // without temporal operators, the best description of {a}-words is plain a
  Sample s{kAB, {w({0})}};
  LtlfLearnResult res =
      learn_ceg_ltlf(s, cfg_n(2), {LtlfOp::Not, LtlfOp::And, LtlfOp::Or});
  for (const Word& u : s.positives) CHECK(satisfies(u, res.formula));
  CHECK(res.formula.size() <= 2);
}
