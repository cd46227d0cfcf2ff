#include "occlearn/oracle.hpp"

#include <cmath>

#include "occlearn/ltlf_learn.hpp"

namespace occlearn {

void enumerate_complete_dfas(std::uint32_t n, const Alphabet& sigma,
                             const std::function<void(const Dfa&)>& fn) {
  const std::size_t cells = static_cast<std::size_t>(n) * sigma.size();
  std::vector<State> delta_flat(cells, 1);
  std::vector<std::vector<State>> delta(n, std::vector<State>(sigma.size()));
  while (true) {
    for (std::uint32_t q = 0; q < n; ++q)
      for (SymbolId a = 0; a < sigma.size(); ++a)
        delta[q][a] = delta_flat[q * sigma.size() + a];
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::set<State> finals;
      for (std::uint32_t q = 1; q <= n; ++q)
        if ((mask >> (q - 1)) & 1) finals.insert(q);
      fn(Dfa(n, sigma, delta, std::move(finals)));
    }
    // odometer over the flattened transition table
    std::size_t i = 0;
    while (i < cells && delta_flat[i] == n) delta_flat[i++] = 1;
    if (i == cells) break;
    ++delta_flat[i];
  }
}

bool dfa_oracle_feasible(std::uint32_t bound, const Alphabet& sigma) {
  double total = 0;
  for (std::uint32_t m = 1; m <= bound; ++m)
    total += std::pow(m, static_cast<double>(m) * sigma.size()) *
             std::pow(2.0, m);
  return total <= 2e5;
}

std::optional<Dfa> find_smaller_description(const Dfa& a, const Sample& s,
                                            std::uint32_t bound) {
  std::optional<Dfa> found;
  for (std::uint32_t m = 1; m <= bound && !found; ++m)
    enumerate_complete_dfas(m, s.alphabet, [&](const Dfa& cand) {
      if (found) return;
      for (const Word& w : s.positives)
        if (!cand.accepts(w)) return;
      if (is_subset(cand, a) && !is_subset(a, cand)) found = cand;
    });
  return found;
}

std::vector<LtlfFormula> enumerate_formulas(std::uint32_t max_size,
                                            const Alphabet& sigma,
                                            const std::vector<LtlfOp>& ops) {
  auto factory = std::make_shared<FormulaFactory>(sigma);
  auto size_of = [&](NodeId root) {
    return LtlfFormula(factory, root).size();
  };
  std::vector<NodeId> pool;
  for (SymbolId a = 0; a < sigma.size(); ++a) pool.push_back(factory->atom(a));
  // closure: keep applying connectives until no new DAG within the bound
  std::size_t frontier_start = 0;
  while (frontier_start < pool.size()) {
    std::size_t frontier_end = pool.size();
    std::set<NodeId> known(pool.begin(), pool.end());
    for (std::size_t fi = frontier_start; fi < frontier_end; ++fi)
      for (LtlfOp op : ops) {
        if (is_unary(op)) {
          NodeId id = factory->mk_unary(op, pool[fi]);
          if (!known.count(id) && size_of(id) <= max_size) {
            pool.push_back(id);
            known.insert(id);
          }
        } else {
          for (std::size_t gi = 0; gi < frontier_end; ++gi) {
            for (auto [l, r] : {std::pair{pool[fi], pool[gi]},
                                std::pair{pool[gi], pool[fi]}}) {
              NodeId id = factory->mk_binary(op, l, r);
              if (!known.count(id) && size_of(id) <= max_size) {
                pool.push_back(id);
                known.insert(id);
              }
            }
          }
        }
      }
    frontier_start = frontier_end;
  }
  std::vector<LtlfFormula> out;
  for (NodeId id : pool) out.emplace_back(factory, id);
  return out;
}

bool ltlf_oracle_feasible(std::uint32_t bound, const Alphabet& sigma) {
  return bound <= 3 && sigma.size() <= 3;
}

std::optional<LtlfFormula> find_stricter_formula(
    const LtlfFormula& phi, const Sample& s, std::uint32_t bound,
    const std::vector<LtlfOp>& ops) {
  for (const LtlfFormula& cand : enumerate_formulas(bound, s.alphabet, ops)) {
    bool ok = true;
    for (const Word& w : s.positives)
      if (!satisfies(w, cand)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (implies(cand, phi) && !implies(phi, cand)) return cand;
  }
  return std::nullopt;
}

}  // namespace occlearn
