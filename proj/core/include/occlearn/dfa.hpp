#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "occlearn/alphabet.hpp"
#include "occlearn/word.hpp"

namespace occlearn {

using State = std::uint32_t;  // states are 1..num_states, initial is 1

/// Complete deterministic finite automaton. Immutable after construction.
class Dfa {
 public:
  Dfa(std::uint32_t num_states, Alphabet alphabet,
      std::vector<std::vector<State>> delta, std::set<State> finals);

  std::uint32_t num_states() const { return num_states_; }
  const Alphabet& alphabet() const { return alphabet_; }
  State initial() const { return 1; }

  State delta(State q, SymbolId a) const { return delta_[q - 1][a]; }
  bool is_final(State q) const { return finals_.count(q) > 0; }
  const std::set<State>& finals() const { return finals_; }

  State run(const Word& w) const;
  bool accepts(const Word& w) const { return is_final(run(w)); }

 private:
  std::uint32_t num_states_;
  Alphabet alphabet_;
  std::vector<std::vector<State>> delta_;  // delta_[q-1][a]
  std::set<State> finals_;
};

/// The one-state DFA accepting every word.
Dfa universal_dfa(const Alphabet& sigma);

/// The one-state DFA accepting no word.
Dfa empty_dfa(const Alphabet& sigma);

/// DFA accepting exactly the given finite set of words (trie plus sink).
Dfa finite_language_dfa(const Alphabet& sigma, const std::set<Word>& words);

/// L(a1) subseteq L(a2), decided by reachability on the product automaton.
bool is_subset(const Dfa& a1, const Dfa& a2);

bool same_language(const Dfa& a1, const Dfa& a2);

/// A shortest word in L(a1) \ L(a2); BFS on the product with ascending
/// symbol-id tie-break, so the result is the shortlex-least separator.
/// Absent iff L(a1) subseteq L(a2).
std::optional<Word> shortest_separating_word(const Dfa& a1, const Dfa& a2);

/// A shortest accepted word (shortlex-least); absent iff the language is empty.
std::optional<Word> shortest_accepted_word(const Dfa& a);

/// Random complete DFA with every state reachable and, for n >= 2, a mix of
/// final and non-final states. Deterministic in the seed.
Dfa random_dfa(std::uint32_t n, const Alphabet& sigma, std::uint64_t seed);

/// Up to `count` distinct accepted words with lengths in [min_len, max_len],
/// drawn by rejection-sampled random walks with a BFS-guided fallback.
/// Throws when no accepted word exists in the range.
std::set<Word> sample_positive_words(const Dfa& a, std::size_t count,
                                     std::size_t min_len, std::size_t max_len,
                                     std::uint64_t seed);

std::string emit_dot(const Dfa& a);
Dfa parse_dot(const std::string& text);

/// Structured JSON serialization (states, delta table, finals); round-trips.
std::string to_json(const Dfa& a);
Dfa dfa_from_json(const std::string& text);

bool isomorphic(const Dfa& a1, const Dfa& a2);

}  // namespace occlearn
