#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "occlearn/cnf.hpp"
#include "occlearn/solver.hpp"

using namespace occlearn;

namespace {

Lit pos(Var v) { return static_cast<Lit>(v); }
Lit neg(Var v) { return -static_cast<Lit>(v); }

// (v_{i,j} chosen per pigeon i) with no hole shared: classic unsat family.
CnfProblem pigeonhole(int pigeons, int holes) {
  CnfProblem cnf;
  std::vector<std::vector<Var>> v(pigeons);
  for (int i = 0; i < pigeons; ++i)
    for (int j = 0; j < holes; ++j) v[i].push_back(cnf.pool().fresh());
  for (int i = 0; i < pigeons; ++i) {
    Clause c;
    for (int j = 0; j < holes; ++j) c.push_back(pos(v[i][j]));
    cnf.add_clause(c);
  }
  for (int j = 0; j < holes; ++j)
    for (int i = 0; i < pigeons; ++i)
      for (int k = i + 1; k < pigeons; ++k)
        cnf.add_clause({neg(v[i][j]), neg(v[k][j])});
  return cnf;
}

}  // namespace

TEST_CASE("satisfiable problem yields a model that satisfies every clause") {
  CnfProblem cnf;
  Var a = cnf.pool().fresh(), b = cnf.pool().fresh(), c = cnf.pool().fresh();
  cnf.add_clause({pos(a), pos(b)});
  cnf.add_clause({neg(a), pos(c)});
  cnf.add_clause({neg(b), neg(c)});
  SolveResult res = solve(cnf);
  REQUIRE(res.sat());
  CHECK(satisfies(cnf, *res.model));
}

TEST_CASE("unit propagation conflicts are unsat") {
  CnfProblem cnf;
  Var a = cnf.pool().fresh();
  cnf.add_unit(pos(a));
  cnf.add_unit(neg(a));
  CHECK(solve(cnf).unsat());
}

TEST_CASE("pigeonhole instances are decided correctly") {
  CHECK(solve(pigeonhole(4, 4)).sat());
  CHECK(solve(pigeonhole(5, 4)).unsat());
  CHECK(solve(pigeonhole(7, 6)).unsat());
}

TEST_CASE("exactly_one admits exactly the one-hot models") {
  for (int forced = 0; forced < 3; ++forced) {
    CnfProblem cnf;
    std::vector<Var> vars{cnf.pool().fresh(), cnf.pool().fresh(),
                          cnf.pool().fresh()};
    exactly_one(cnf, vars);
    cnf.add_unit(pos(vars[forced]));
    SolveResult res = solve(cnf);
    REQUIRE(res.sat());
    for (int i = 0; i < 3; ++i)
      CHECK(res.model->value(vars[i]) == (i == forced));
  }
  CnfProblem cnf;
  std::vector<Var> vars{cnf.pool().fresh(), cnf.pool().fresh()};
  exactly_one(cnf, vars);
  cnf.add_unit(pos(vars[0]));
  cnf.add_unit(pos(vars[1]));
  CHECK(solve(cnf).unsat());
}

TEST_CASE("same seed reproduces the same model") {
  auto run = [](std::uint64_t seed) {
    CnfProblem cnf;
    std::vector<Var> vars;
    for (int i = 0; i < 12; ++i) vars.push_back(cnf.pool().fresh());
    for (int i = 0; i < 12; i += 3)
      cnf.add_clause({pos(vars[i]), pos(vars[i + 1]), pos(vars[i + 2])});
    SolverConfig cfg;
    cfg.seed = seed;
    SolveResult res = solve(cnf, cfg);
    REQUIRE(res.sat());
    std::vector<bool> vals;
    for (Var v : vars) vals.push_back(res.model->value(v));
    return vals;
  };
  CHECK(run(7) == run(7));
  CHECK(run(1) == run(1));
}

TEST_CASE("phase hints steer the model but never satisfiability") {
  for (bool hint : {false, true}) {
    CnfProblem cnf;
    Var a = cnf.pool().fresh(), b = cnf.pool().fresh();
    cnf.add_clause({pos(a), pos(b)});
    cnf.suggest_phase(a, hint);
    cnf.suggest_phase(b, hint);
    SolveResult res = solve(cnf);
    REQUIRE(res.sat());
    CHECK(satisfies(cnf, *res.model));
  }
  CnfProblem cnf;
  Var a = cnf.pool().fresh();
  cnf.suggest_phase(a, true);
  cnf.add_unit(pos(a));
  cnf.add_unit(neg(a));
  CHECK(solve(cnf).unsat());
}

TEST_CASE("timeout budget reports TimedOut instead of an answer") {
  CnfProblem cnf = pigeonhole(9, 8);
  SolverConfig cfg;
  cfg.budget = std::chrono::duration<double>(0.0);
  CHECK(solve(cnf, cfg).timed_out());
}

TEST_CASE("dimacs emission carries the header and clause count") {
  CnfProblem cnf;
  Var a = cnf.pool().fresh("a"), b = cnf.pool().fresh("b");
  cnf.add_clause({pos(a), neg(b)});
  cnf.add_unit(pos(b));
  std::ostringstream out;
  cnf.emit_dimacs(out, true);
  std::string text = out.str();
  CHECK(text.find("p cnf 2 2") != std::string::npos);
  CHECK(text.find("1 -2 0") != std::string::npos);
  CHECK(text.find("a") != std::string::npos);  // tag comment
}

TEST_CASE("external solver path runs a DIMACS executable") {
  // stub "solver": a script that answers a fixed satisfiable instance
  std::string path = "/tmp/occlearn_stub_solver.sh";
  {
    std::ofstream out(path);
    out << "#!/bin/sh\necho 's SATISFIABLE'\necho 'v 1 -2 0'\n";
  }
  REQUIRE(std::system(("chmod +x " + path).c_str()) == 0);
  CnfProblem cnf;
  Var a = cnf.pool().fresh(), b = cnf.pool().fresh();
  cnf.add_clause({pos(a), neg(b)});
  SolverConfig cfg;
  cfg.external_path = path;
  SolveResult res = solve(cnf, cfg);
  REQUIRE(res.sat());
  CHECK(res.model->value(a));
  CHECK(!res.model->value(b));
  std::remove(path.c_str());
}
