#include "occlearn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace occlearn {

namespace {

using Clock = std::chrono::steady_clock;

// Internal literal encoding: variable v (1-based), polarity p -> 2*(v-1)+p
// with p=0 positive, p=1 negated.
struct CdclSolver {
  struct ClauseData {
    std::vector<int> lits;
  };

  int nvars;
  std::vector<ClauseData> clauses;
  std::vector<std::vector<int>> watches;    // lit -> clause indices watching lit
  std::vector<signed char> assign;          // var idx (0-based) -> -1 unset, 0/1
  std::vector<int> reason;                  // var idx -> clause index or -1
  std::vector<int> level;                   // var idx -> decision level
  std::vector<int> trail;                   // assigned lits in order
  std::vector<int> trail_lim;               // decision level boundaries
  std::size_t qhead = 0;
  std::vector<double> activity;
  std::vector<signed char> phase;
  double var_inc = 1.0;
  std::uint64_t conflicts = 0;

  explicit CdclSolver(int n) : nvars(n) {
    watches.resize(2 * n);
    assign.assign(n, -1);
    reason.assign(n, -1);
    level.assign(n, 0);
    activity.assign(n, 0.0);
    phase.assign(n, 0);
  }

  static int var_of(int lit) { return lit >> 1; }
  static bool sign_of(int lit) { return lit & 1; }
  static int neg(int lit) { return lit ^ 1; }

  int value(int lit) const {  // -1 unset, 0 false, 1 true
    signed char a = assign[var_of(lit)];
    if (a < 0) return -1;
    return a ^ static_cast<int>(sign_of(lit));
  }

  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  void enqueue(int lit, int reason_clause) {
    int v = var_of(lit);
    assign[v] = sign_of(lit) ? 0 : 1;
    reason[v] = reason_clause;
    level[v] = decision_level();
    trail.push_back(lit);
  }

  // Returns conflicting clause index or -1.
  int propagate() {
    while (qhead < trail.size()) {
      int lit = trail[qhead++];
      int flit = neg(lit);  // watchers of flit need attention
      std::vector<int>& ws = watches[flit];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        int ci = ws[i];
        auto& c = clauses[ci].lits;
        if (c[0] == flit) std::swap(c[0], c[1]);
        // c[1] == flit now
        if (value(c[0]) == 1) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches[c[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (value(c[0]) == 0) {
          // conflict: restore remaining watchers
          for (std::size_t k = i + 1; k < ws.size(); ++k) ws[keep++] = ws[k];
          ws.resize(keep);
          qhead = trail.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(keep);
    }
    return -1;
  }

  void bump(int v) {
    activity[v] += var_inc;
    if (activity[v] > 1e100) {
      for (double& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
  }

  void backtrack(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t i = trail.size(); i-- > static_cast<std::size_t>(trail_lim[lvl]);) {
      int v = var_of(trail[i]);
      phase[v] = assign[v];
      assign[v] = -1;
      reason[v] = -1;
    }
    trail.resize(trail_lim[lvl]);
    trail_lim.resize(lvl);
    qhead = trail.size();
  }

  // 1UIP learning. Returns (learnt clause with asserting literal first,
  // backjump level).
  std::pair<std::vector<int>, int> analyze(int confl) {
    std::vector<int> learnt{0};
    std::vector<bool> seen(nvars, false);
    int counter = 0;
    int lit = -1;
    std::size_t idx = trail.size();
    int cur = confl;
    do {
      const auto& c = clauses[cur].lits;
      for (std::size_t k = (lit == -1 ? 0 : 1); k < c.size(); ++k) {
        int q = c[k];
        int v = var_of(q);
        if (seen[v] || level[v] == 0) continue;
        seen[v] = true;
        bump(v);
        if (level[v] == decision_level())
          ++counter;
        else
          learnt.push_back(q);
      }
      while (!seen[var_of(trail[--idx])]) {
      }
      lit = trail[idx];
      cur = reason[var_of(lit)];
      seen[var_of(lit)] = false;
      --counter;
    } while (counter > 0);
    learnt[0] = neg(lit);

    int bj = 0;
    if (learnt.size() > 1) {
      std::size_t maxi = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k)
        if (level[var_of(learnt[k])] > level[var_of(learnt[maxi])]) maxi = k;
      std::swap(learnt[1], learnt[maxi]);
      bj = level[var_of(learnt[1])];
    }
    return {std::move(learnt), bj};
  }

  int pick_branch() {
    int best = -1;
    double best_act = -1.0;
    for (int v = 0; v < nvars; ++v) {
      if (assign[v] >= 0) continue;
      if (activity[v] > best_act) {
        best_act = activity[v];
        best = v;
      }
    }
    if (best < 0) return -1;
    return 2 * best + (phase[best] ? 0 : 1);
  }

  static std::uint64_t luby(std::uint64_t x) {
    std::uint64_t size = 1, seq = 0;
    while (size < x + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return 1ull << seq;
  }

  SolveStatus run(const std::optional<Clock::time_point>& deadline,
                  std::vector<bool>& model_out) {
    if (int confl = propagate(); confl >= 0) return SolveStatus::Unsat;
    std::uint64_t restart_count = 0;
    std::uint64_t restart_limit = 100 * luby(restart_count);
    std::uint64_t conflicts_at_restart = 0;
    for (;;) {
      int confl = propagate();
      if (confl >= 0) {
        ++conflicts;
        var_inc *= 1.0 / 0.95;
        if (decision_level() == 0) return SolveStatus::Unsat;
        auto [learnt, bj] = analyze(confl);
        backtrack(bj);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          clauses.push_back({learnt});
          int ci = static_cast<int>(clauses.size()) - 1;
          watches[learnt[0]].push_back(ci);
          watches[learnt[1]].push_back(ci);
          enqueue(learnt[0], ci);
        }
        if ((conflicts & 63) == 0 && deadline &&
            Clock::now() > *deadline)
          return SolveStatus::TimedOut;
        if (conflicts - conflicts_at_restart >= restart_limit) {
          backtrack(0);
          conflicts_at_restart = conflicts;
          restart_limit = 100 * luby(++restart_count);
        }
      } else {
        int lit = pick_branch();
        if (lit < 0) {
          model_out.assign(nvars, false);
          for (int v = 0; v < nvars; ++v) model_out[v] = assign[v] == 1;
          return SolveStatus::Sat;
        }
        trail_lim.push_back(static_cast<int>(trail.size()));
        enqueue(lit, -1);
      }
    }
  }
};

SolveResult solve_internal(const CnfProblem& problem,
                           const SolverConfig& config) {
  auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (config.budget)
    deadline = start + std::chrono::duration_cast<Clock::duration>(*config.budget);

  int n = static_cast<int>(problem.pool().num_vars());
  CdclSolver solver(n);
  // Seed only perturbs the initial branching order; results stay
  // deterministic for a fixed seed.
  std::uint64_t s = config.seed * 6364136223846793005ull + 1442695040888963407ull;
  for (int v = 0; v < n; ++v) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    solver.activity[v] = 1e-9 * static_cast<double>(s >> 40);
    solver.phase[v] = static_cast<signed char>((s >> 33) & 1);
  }
  // Encoder-provided polarity hints: branch on these variables first, with
  // the suggested polarity. Purely heuristic; satisfiability is unaffected.
  for (const auto& [v, val] : problem.phase_hints()) {
    solver.phase[static_cast<int>(v) - 1] = val ? 1 : 0;
    solver.activity[static_cast<int>(v) - 1] += 1.0;
  }

  bool trivially_unsat = false;
  for (const Clause& c : problem.clauses()) {
    std::vector<int> lits;
    lits.reserve(c.size());
    for (Lit l : c) {
      int v = (l > 0 ? l : -l) - 1;
      lits.push_back(2 * v + (l < 0 ? 1 : 0));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    bool taut = false;
    for (std::size_t i = 0; i + 1 < lits.size(); ++i)
      if (lits[i + 1] == CdclSolver::neg(lits[i])) taut = true;
    if (taut) continue;
    if (lits.size() == 1) {
      int val = solver.value(lits[0]);
      if (val == 0) trivially_unsat = true;
      else if (val == -1) solver.enqueue(lits[0], -1);
      continue;
    }
    solver.clauses.push_back({lits});
    int ci = static_cast<int>(solver.clauses.size()) - 1;
    solver.watches[lits[0]].push_back(ci);
    solver.watches[lits[1]].push_back(ci);
  }

  SolveResult res;
  if (trivially_unsat) {
    res.status = SolveStatus::Unsat;
  } else {
    std::vector<bool> model;
    res.status = solver.run(deadline, model);
    if (res.status == SolveStatus::Sat) res.model.emplace(std::move(model));
  }
  res.elapsed = Clock::now() - start;
  return res;
}

SolveResult solve_external(const CnfProblem& problem,
                           const SolverConfig& config) {
  auto start = Clock::now();
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();
  fs::path cnf = dir / ("occlearn-" + std::to_string(::getpid()) + "-" +
                        std::to_string(reinterpret_cast<std::uintptr_t>(&problem)) +
                        ".cnf");
  fs::path out = cnf;
  out += ".out";
  {
    std::ofstream f(cnf);
    if (!f) throw Error("cannot write temporary CNF file");
    problem.emit_dimacs(f);
  }
  std::string cmd = *config.external_path + " " + cnf.string() + " > " +
                    out.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream f(out);
  std::string result_text((std::istreambuf_iterator<char>(f)),
                          std::istreambuf_iterator<char>());
  fs::remove(cnf);
  fs::remove(out);

  SolveResult res;
  res.elapsed = Clock::now() - start;
  std::istringstream in(result_text);
  std::string line;
  std::optional<bool> sat;
  std::vector<bool> model(problem.pool().num_vars(), false);
  while (std::getline(in, line)) {
    if (line.rfind("s SATISFIABLE", 0) == 0) sat = true;
    else if (line.rfind("s UNSATISFIABLE", 0) == 0) sat = false;
    else if (!line.empty() && line[0] == 'v') {
      std::istringstream vs(line.substr(1));
      long lit;
      while (vs >> lit) {
        if (lit == 0) continue;
        Var v = static_cast<Var>(lit > 0 ? lit : -lit);
        if (v >= 1 && v <= problem.pool().num_vars()) model[v - 1] = lit > 0;
      }
    }
  }
  if (!sat) {
    throw Error("external solver '" + *config.external_path +
                "' produced no verdict (exit " + std::to_string(rc) + ")");
  }
  res.status = *sat ? SolveStatus::Sat : SolveStatus::Unsat;
  if (*sat) res.model.emplace(std::move(model));
  return res;
}

}  // namespace

SolveResult solve(const CnfProblem& problem, const SolverConfig& config) {
  if (config.external_path) return solve_external(problem, config);
  return solve_internal(problem, config);
}

bool satisfies(const CnfProblem& problem, const Model& model) {
  for (const Clause& c : problem.clauses()) {
    bool ok = false;
    for (Lit l : c) {
      Var v = static_cast<Var>(l > 0 ? l : -l);
      if (model.value(v) == (l > 0)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace occlearn
