// Micro-benchmarks for the hot paths: SAT solving, the DFA and formula
// encodings, automaton products, and end-to-end learning on small samples.

#include <benchmark/benchmark.h>

#include "occlearn/dfa_learn.hpp"
#include "occlearn/ltlf_learn.hpp"
#include "occlearn/oracle.hpp"

using namespace occlearn;

namespace {

const Alphabet kAB({"a", "b"});

CnfProblem pigeonhole(int pigeons, int holes) {
  CnfProblem cnf;
  std::vector<std::vector<Var>> at(pigeons);
  for (int p = 0; p < pigeons; ++p)
    for (int h = 0; h < holes; ++h)
      at[p].push_back(cnf.pool().fresh("p" + std::to_string(p) + "_" +
                                       std::to_string(h)));
  for (int p = 0; p < pigeons; ++p) {
    std::vector<Lit> clause;
    for (Var v : at[p]) clause.push_back(static_cast<Lit>(v));
    cnf.add_clause(clause);
  }
  for (int h = 0; h < holes; ++h)
    for (int p1 = 0; p1 < pigeons; ++p1)
      for (int p2 = p1 + 1; p2 < pigeons; ++p2)
        cnf.add_clause({-static_cast<Lit>(at[p1][h]),
                        -static_cast<Lit>(at[p2][h])});
  return cnf;
}

Sample random_sample(std::uint32_t target_size, std::uint64_t seed) {
  Dfa target = random_dfa(target_size, kAB, seed);
  return Sample{kAB, sample_positive_words(target, 20, 1, 8, seed + 1)};
}

void BM_SolveSatPigeonhole(benchmark::State& state) {
  CnfProblem cnf = pigeonhole(6, 6);
  for (auto _ : state) {
    SolverConfig sc;
    sc.seed = 1;
    benchmark::DoNotOptimize(solve(cnf, sc));
  }
}
BENCHMARK(BM_SolveSatPigeonhole);

void BM_SolveUnsatPigeonhole(benchmark::State& state) {
  CnfProblem cnf = pigeonhole(7, 6);
  for (auto _ : state) {
    SolverConfig sc;
    sc.seed = 1;
    benchmark::DoNotOptimize(solve(cnf, sc));
  }
}
BENCHMARK(BM_SolveUnsatPigeonhole);

void BM_EncodeDfaStructure(benchmark::State& state) {
  auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    CnfProblem cnf;
    benchmark::DoNotOptimize(encode_structure(cnf, m, kAB));
  }
}
BENCHMARK(BM_EncodeDfaStructure)->Arg(4)->Arg(8)->Arg(16);

void BM_EncodeStrictness(benchmark::State& state) {
  auto m = static_cast<std::uint32_t>(state.range(0));
  Dfa ref = random_dfa(m, kAB, 7);
  for (auto _ : state) {
    CnfProblem cnf;
    DfaVarLayout layout = encode_structure(cnf, m, kAB);
    encode_subset(cnf, layout, ref);
    encode_strictness(cnf, layout, ref);
    benchmark::DoNotOptimize(cnf.num_clauses());
  }
}
BENCHMARK(BM_EncodeStrictness)->Arg(3)->Arg(5);

void BM_SubsetCheck(benchmark::State& state) {
  Dfa a = random_dfa(12, kAB, 5);
  Dfa b = random_dfa(12, kAB, 6);
  for (auto _ : state) benchmark::DoNotOptimize(is_subset(a, b));
}
BENCHMARK(BM_SubsetCheck);

void BM_ShortestSeparator(benchmark::State& state) {
  Dfa a = universal_dfa(kAB);
  Dfa b = random_dfa(10, kAB, 9);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_separating_word(a, b));
}
BENCHMARK(BM_ShortestSeparator);

void BM_FormulaToDfa(benchmark::State& state) {
  LtlfFormula phi = parse_formula("(F b) -> (!a U b)", kAB);
  for (auto _ : state) benchmark::DoNotOptimize(to_dfa(phi, kAB));
}
BENCHMARK(BM_FormulaToDfa);

void BM_EvaluateFormulas(benchmark::State& state) {
  auto formulas = enumerate_formulas(3, kAB, default_operator_set());
  Word u({0, 1, 0, 0, 1, 1, 0, 1});
  for (auto _ : state)
    for (const auto& phi : formulas)
      benchmark::DoNotOptimize(satisfies(u, phi));
}
BENCHMARK(BM_EvaluateFormulas);

void BM_LearnDfaSym(benchmark::State& state) {
  Sample s = random_sample(3, 21);
  LearnConfig cfg;
  cfg.size_bound = 3;
  for (auto _ : state) benchmark::DoNotOptimize(learn_sym_dfa(s, cfg));
}
BENCHMARK(BM_LearnDfaSym);

void BM_LearnDfaCeg(benchmark::State& state) {
  Sample s = random_sample(3, 21);
  LearnConfig cfg;
  cfg.size_bound = 3;
  for (auto _ : state) benchmark::DoNotOptimize(learn_ceg_dfa(s, cfg));
}
BENCHMARK(BM_LearnDfaCeg);

void BM_LearnLtlfSsym(benchmark::State& state) {
  LtlfFormula target = parse_formula("G a", kAB);
  Sample s{kAB, {Word({0}), Word({0, 0}), Word({0, 0, 0})}};
  LearnConfig cfg;
  cfg.size_bound = 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(learn_ssym_ltlf(s, cfg, {5}));
}
BENCHMARK(BM_LearnLtlfSsym);

}  // namespace

BENCHMARK_MAIN();
