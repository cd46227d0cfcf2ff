#include "occlearn/dfa.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "occlearn/error.hpp"
#include "occlearn/sample.hpp"

namespace occlearn {

Dfa::Dfa(std::uint32_t num_states, Alphabet alphabet,
         std::vector<std::vector<State>> delta, std::set<State> finals)
    : num_states_(num_states),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      finals_(std::move(finals)) {
  if (num_states_ < 1) throw Error("DFA needs at least one state");
  if (delta_.size() != num_states_) throw Error("delta table has wrong height");
  for (const auto& row : delta_) {
    if (row.size() != alphabet_.size()) throw Error("delta table has wrong width");
    for (State q : row)
      if (q < 1 || q > num_states_) throw Error("delta target out of range");
  }
  for (State q : finals_)
    if (q < 1 || q > num_states_) throw Error("final state out of range");
}

State Dfa::run(const Word& w) const {
  State q = initial();
  for (SymbolId a : w.syms()) q = delta(q, a);
  return q;
}

Dfa universal_dfa(const Alphabet& sigma) {
  std::vector<std::vector<State>> delta(1, std::vector<State>(sigma.size(), 1));
  return Dfa(1, sigma, std::move(delta), {1});
}

Dfa empty_dfa(const Alphabet& sigma) {
  std::vector<std::vector<State>> delta(1, std::vector<State>(sigma.size(), 1));
  return Dfa(1, sigma, std::move(delta), {});
}

Dfa finite_language_dfa(const Alphabet& sigma, const std::set<Word>& words) {
  // trie states, then one sink
  std::map<Word, State> ids;
  std::set<Word> prefs = prefixes(words);
  prefs.insert(Word{});  // root exists even for an empty language
  State next = 1;
  for (const auto& u : prefs) ids.emplace(u, next++);
  // relabel so that the root (empty prefix) is state 1
  State root = ids[Word{}];
  for (auto& [u, q] : ids) {
    if (q == 1) q = root;
    else if (q == root) q = 1;
  }
  State sink = next;
  std::uint32_t n = sink;
  std::vector<std::vector<State>> delta(n, std::vector<State>(sigma.size(), sink));
  std::set<State> finals;
  for (const auto& [u, q] : ids) {
    for (SymbolId a = 0; a < sigma.size(); ++a) {
      auto it = ids.find(u.append(a));
      if (it != ids.end()) delta[q - 1][a] = it->second;
    }
    if (words.count(u)) finals.insert(q);
  }
  return Dfa(n, sigma, std::move(delta), std::move(finals));
}

namespace {

void check_same_alphabet(const Dfa& a1, const Dfa& a2) {
  if (!(a1.alphabet() == a2.alphabet()))
    throw Error("DFAs are over different alphabets");
}

// BFS over the product automaton; visit() is called once per reachable pair
// with the shortlex-least word reaching it. Returning true stops the search.
template <typename Visit>
void product_bfs(const Dfa& a1, const Dfa& a2, Visit visit) {
  std::vector<bool> seen(static_cast<std::size_t>(a1.num_states()) * a2.num_states(),
                         false);
  auto idx = [&](State p, State q) {
    return static_cast<std::size_t>(p - 1) * a2.num_states() + (q - 1);
  };
  std::deque<std::pair<std::pair<State, State>, Word>> queue;
  queue.push_back({{a1.initial(), a2.initial()}, Word{}});
  seen[idx(a1.initial(), a2.initial())] = true;
  while (!queue.empty()) {
    auto [pair, w] = queue.front();
    queue.pop_front();
    if (visit(pair.first, pair.second, w)) return;
    for (SymbolId a = 0; a < a1.alphabet().size(); ++a) {
      State p = a1.delta(pair.first, a);
      State q = a2.delta(pair.second, a);
      if (!seen[idx(p, q)]) {
        seen[idx(p, q)] = true;
        queue.push_back({{p, q}, w.append(a)});
      }
    }
  }
}

}  // namespace

bool is_subset(const Dfa& a1, const Dfa& a2) {
  check_same_alphabet(a1, a2);
  bool subset = true;
  product_bfs(a1, a2, [&](State p, State q, const Word&) {
    if (a1.is_final(p) && !a2.is_final(q)) {
      subset = false;
      return true;
    }
    return false;
  });
  return subset;
}

bool same_language(const Dfa& a1, const Dfa& a2) {
  return is_subset(a1, a2) && is_subset(a2, a1);
}

std::optional<Word> shortest_separating_word(const Dfa& a1, const Dfa& a2) {
  check_same_alphabet(a1, a2);
  std::optional<Word> found;
  product_bfs(a1, a2, [&](State p, State q, const Word& w) {
    if (a1.is_final(p) && !a2.is_final(q)) {
      found = w;
      return true;
    }
    return false;
  });
  return found;
}

std::optional<Word> shortest_accepted_word(const Dfa& a) {
  return shortest_separating_word(a, empty_dfa(a.alphabet()));
}

Dfa random_dfa(std::uint32_t n, const Alphabet& sigma, std::uint64_t seed) {
  if (n < 1) throw Error("random_dfa needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<State> state_dist(1, n);
  for (;;) {
    std::vector<std::vector<State>> delta(n, std::vector<State>(sigma.size()));
    for (auto& row : delta)
      for (auto& q : row) q = state_dist(rng);
    std::set<State> finals;
    for (State q = 1; q <= n; ++q)
      if (rng() & 1) finals.insert(q);
    if (n >= 2 && (finals.empty() || finals.size() == n)) continue;
    // reachability from the initial state
    std::vector<bool> seen(n + 1, false);
    std::deque<State> queue{1};
    seen[1] = true;
    std::uint32_t count = 1;
    while (!queue.empty()) {
      State q = queue.front();
      queue.pop_front();
      for (SymbolId a = 0; a < sigma.size(); ++a) {
        State p = delta[q - 1][a];
        if (!seen[p]) {
          seen[p] = true;
          ++count;
          queue.push_back(p);
        }
      }
    }
    if (count != n) continue;
    return Dfa(n, sigma, std::move(delta), std::move(finals));
  }
}

std::set<Word> sample_positive_words(const Dfa& a, std::size_t count,
                                     std::size_t min_len, std::size_t max_len,
                                     std::uint64_t seed) {
  if (min_len > max_len) throw Error("empty length range");
  // distance from each state to the nearest final state
  const std::uint32_t n = a.num_states();
  std::vector<std::uint32_t> dist(n + 1, UINT32_MAX);
  std::deque<State> queue;
  for (State q = 1; q <= n; ++q)
    if (a.is_final(q)) {
      dist[q] = 0;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p = 1; p <= n; ++p)
      for (SymbolId s = 0; s < a.alphabet().size(); ++s)
        if (a.delta(p, s) == q && dist[p] == UINT32_MAX) {
          dist[p] = dist[q] + 1;
          queue.push_back(p);
        }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<SymbolId> sym_dist(
      0, static_cast<SymbolId>(a.alphabet().size() - 1));
  std::set<Word> out;
  std::size_t attempts = 0;
  const std::size_t max_attempts = 100 * std::max<std::size_t>(count, 1);
  while (out.size() < count && attempts < max_attempts) {
    ++attempts;
    std::size_t len = len_dist(rng);
    std::vector<SymbolId> syms(len);
    for (auto& s : syms) s = sym_dist(rng);
    Word w{std::move(syms)};
    if (a.accepts(w)) out.insert(w);
  }
  // BFS-guided completion: random walk, then steer to the nearest final state
  attempts = 0;
  while (out.size() < count && attempts < max_attempts) {
    ++attempts;
    std::size_t len = len_dist(rng);
    std::vector<SymbolId> syms;
    State q = a.initial();
    bool ok = true;
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t remaining = len - i;
      // allow only successors that can still reach a final state within the
      // remaining budget; exact-length failures fall back to a retry
      std::vector<SymbolId> good;
      for (SymbolId s = 0; s < a.alphabet().size(); ++s) {
        State p = a.delta(q, s);
        if (dist[p] != UINT32_MAX && dist[p] <= remaining - 1) good.push_back(s);
      }
      if (good.empty()) {
        ok = false;
        break;
      }
      SymbolId s = good[rng() % good.size()];
      syms.push_back(s);
      q = a.delta(q, s);
    }
    if (!ok) continue;
    Word w{std::move(syms)};
    if (a.accepts(w)) out.insert(w);
  }
  if (out.size() < count) {
    // top up by budgeted shortlex enumeration; also proves emptiness for the
    // error case when the enumeration completes without a hit
    std::deque<std::pair<Word, State>> q2{{Word{}, a.initial()}};
    std::size_t budget = 500000;
    bool truncated = false;
    while (!q2.empty()) {
      auto [w, q] = q2.front();
      q2.pop_front();
      if (w.length() >= min_len && a.is_final(q)) {
        out.insert(w);
        if (out.size() >= count) break;
      }
      if (w.length() == max_len) continue;
      for (SymbolId s = 0; s < a.alphabet().size(); ++s) {
        if (budget == 0) {
          truncated = true;
          break;
        }
        --budget;
        q2.push_back({w.append(s), a.delta(q, s)});
      }
    }
    if (out.empty() && !truncated)
      throw Error("no accepted word with length in [" + std::to_string(min_len) +
                  ", " + std::to_string(max_len) + "]");
  }
  return out;
}

std::string emit_dot(const Dfa& a) {
  std::ostringstream out;
  out << "digraph dfa {\n";
  out << "  rankdir=LR;\n";
  out << "  __init [shape=point];\n";
  for (State q = 1; q <= a.num_states(); ++q)
    out << "  q" << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle")
        << "];\n";
  out << "  __init -> q1;\n";
  for (State q = 1; q <= a.num_states(); ++q)
    for (SymbolId s = 0; s < a.alphabet().size(); ++s)
      out << "  q" << q << " -> q" << a.delta(q, s) << " [label=\""
          << a.alphabet().name(s) << "\"];\n";
  out << "}\n";
  return out.str();
}

Dfa parse_dot(const std::string& text) {
  // Reads back the emit_dot format (not general GraphViz).
  std::istringstream in(text);
  std::string line;
  std::uint32_t num_states = 0;
  std::set<State> finals;
  std::vector<std::tuple<State, State, std::string>> edges;
  std::vector<std::string> names;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto q_at = [&](std::size_t pos) -> State {
      std::size_t end = pos;
      while (end < line.size() && isdigit(static_cast<unsigned char>(line[end])))
        ++end;
      if (end == pos) throw ParseError("expected state number", lineno);
      return static_cast<State>(std::stoul(line.substr(pos, end - pos)));
    };
    std::size_t p = line.find("q");
    if (p == std::string::npos) continue;
    if (line.find("__init") != std::string::npos) continue;
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) {
      State q = q_at(p + 1);
      num_states = std::max(num_states, q);
      if (line.find("doublecircle") != std::string::npos) finals.insert(q);
    } else {
      State from = q_at(p + 1);
      std::size_t p2 = line.find('q', arrow);
      State to = q_at(p2 + 1);
      std::size_t l1 = line.find("label=\"");
      std::size_t l2 = line.find('"', l1 + 7);
      if (l1 == std::string::npos || l2 == std::string::npos)
        throw ParseError("edge without label", lineno);
      std::string sym = line.substr(l1 + 7, l2 - l1 - 7);
      edges.emplace_back(from, to, sym);
      num_states = std::max({num_states, from, to});
      bool known = false;
      for (const auto& nm : names) known = known || nm == sym;
      if (!known) names.push_back(sym);
    }
  }
  if (num_states == 0) throw Error("no states in DOT input");
  Alphabet sigma(names);
  std::vector<std::vector<State>> delta(num_states,
                                        std::vector<State>(sigma.size(), 0));
  for (const auto& [from, to, sym] : edges) delta[from - 1][*sigma.id_of(sym)] = to;
  for (const auto& row : delta)
    for (State q : row)
      if (q == 0) throw Error("incomplete transition table in DOT input");
  return Dfa(num_states, sigma, std::move(delta), std::move(finals));
}

std::string to_json(const Dfa& a) {
  nlohmann::json j;
  j["type"] = "dfa";
  j["alphabet"] = a.alphabet().names();
  j["num_states"] = a.num_states();
  j["initial"] = 1;
  std::vector<std::vector<State>> delta;
  for (State q = 1; q <= a.num_states(); ++q) {
    std::vector<State> row;
    for (SymbolId s = 0; s < a.alphabet().size(); ++s) row.push_back(a.delta(q, s));
    delta.push_back(std::move(row));
  }
  j["delta"] = delta;
  j["finals"] = a.finals();
  return j.dump(2);
}

Dfa dfa_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Alphabet sigma(j.at("alphabet").get<std::vector<std::string>>());
  auto delta = j.at("delta").get<std::vector<std::vector<State>>>();
  auto finals_vec = j.at("finals").get<std::vector<State>>();
  return Dfa(j.at("num_states").get<std::uint32_t>(), std::move(sigma),
             std::move(delta), std::set<State>(finals_vec.begin(), finals_vec.end()));
}

bool isomorphic(const Dfa& a1, const Dfa& a2) {
  if (a1.num_states() != a2.num_states()) return false;
  if (!(a1.alphabet() == a2.alphabet())) return false;
  // synchronized BFS; both DFAs are complete, so the pairing is forced
  std::vector<State> map1(a1.num_states() + 1, 0);
  std::vector<bool> used2(a2.num_states() + 1, false);
  std::deque<std::pair<State, State>> queue{{1, 1}};
  map1[1] = 1;
  used2[1] = true;
  bool ok = true;
  while (!queue.empty() && ok) {
    auto [p, q] = queue.front();
    queue.pop_front();
    if (a1.is_final(p) != a2.is_final(q)) return false;
    for (SymbolId s = 0; s < a1.alphabet().size(); ++s) {
      State p2 = a1.delta(p, s);
      State q2 = a2.delta(q, s);
      if (map1[p2] == 0) {
        if (used2[q2]) return false;
        map1[p2] = q2;
        used2[q2] = true;
        queue.push_back({p2, q2});
      } else if (map1[p2] != q2) {
        return false;
      }
    }
  }
  // unreachable states (if any) only need matching counts of finality
  std::size_t unmapped_final1 = 0, unmapped_final2 = 0, unmapped1 = 0, unmapped2 = 0;
  for (State q = 1; q <= a1.num_states(); ++q)
    if (map1[q] == 0) {
      ++unmapped1;
      if (a1.is_final(q)) ++unmapped_final1;
    }
  for (State q = 1; q <= a2.num_states(); ++q)
    if (!used2[q]) {
      ++unmapped2;
      if (a2.is_final(q)) ++unmapped_final2;
    }
  return unmapped1 == unmapped2 && unmapped_final1 == unmapped_final2;
}

}  // namespace occlearn
