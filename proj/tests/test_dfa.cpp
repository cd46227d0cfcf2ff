#include <doctest.h>

#include "occlearn/dfa.hpp"
#include "occlearn/sample.hpp"

using namespace occlearn;

namespace {

const Alphabet kAB({"a", "b"});

Word w(std::vector<SymbolId> syms) { return Word(std::move(syms)); }

// 2-state DFA over {a,b} accepting words with an even number of b's.
Dfa even_b() {
  return Dfa(2, kAB, {{1, 2}, {2, 1}}, {1});
}

}  // namespace

TEST_CASE("runs start in state 1 and follow delta") {
  Dfa a = even_b();
  CHECK(a.accepts(Word()));
  CHECK(a.accepts(w({1, 1})));
  CHECK(!a.accepts(w({1})));
  CHECK(a.accepts(w({0, 1, 0, 1, 0})));
}

TEST_CASE("universal and empty automata") {
  CHECK(universal_dfa(kAB).accepts(Word()));
  CHECK(universal_dfa(kAB).accepts(w({0, 1, 1})));
  CHECK(!empty_dfa(kAB).accepts(Word()));
  CHECK(!shortest_accepted_word(empty_dfa(kAB)).has_value());
  CHECK(*shortest_accepted_word(universal_dfa(kAB)) == Word());
}

TEST_CASE("finite_language_dfa accepts exactly the given words") {
  std::set<Word> words{w({0}), w({0, 1}), Word()};
  Dfa a = finite_language_dfa(kAB, words);
  for (const Word& u : words) CHECK(a.accepts(u));
  CHECK(!a.accepts(w({1})));
  CHECK(!a.accepts(w({0, 0})));
  CHECK(!a.accepts(w({0, 1, 0})));
  Dfa none = finite_language_dfa(kAB, {});
  CHECK(same_language(none, empty_dfa(kAB)));
}

TEST_CASE("subset and equality checks") {
  Dfa a = even_b();
  CHECK(is_subset(a, universal_dfa(kAB)));
  CHECK(!is_subset(universal_dfa(kAB), a));
  CHECK(is_subset(empty_dfa(kAB), a));
  CHECK(same_language(a, a));
  CHECK(!same_language(a, universal_dfa(kAB)));

  // equal languages through different state counts
  Dfa bloated(3, kAB, {{3, 2}, {2, 3}, {1, 2}}, {1, 3});
  CHECK(same_language(a, bloated));
}

TEST_CASE("shortest separating word is shortlex-least") {
  Dfa a = even_b();
  auto sep = shortest_separating_word(universal_dfa(kAB), a);
  REQUIRE(sep.has_value());
  CHECK(*sep == w({1}));  // "b" is the shortlex-least word with odd b count
  CHECK(!shortest_separating_word(a, a).has_value());
  CHECK(!shortest_separating_word(empty_dfa(kAB), a).has_value());
}

TEST_CASE("separating words respect the product-size bound") {
  // pairs with strict inclusion built by dropping a final state
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::uint32_t n = 2 + seed % 4;
    Dfa big = random_dfa(n, kAB, seed);
    if (big.finals().empty()) continue;
    std::set<State> reduced = big.finals();
    reduced.erase(*reduced.begin());
    std::vector<std::vector<State>> delta;
    for (State q = 1; q <= n; ++q) {
      delta.push_back({});
      for (SymbolId s = 0; s < kAB.size(); ++s)
        delta.back().push_back(big.delta(q, s));
    }
    Dfa small(n, kAB, delta, reduced);
    if (same_language(big, small)) continue;
    REQUIRE(is_subset(small, big));
    auto sep = shortest_separating_word(big, small);
    REQUIRE(sep.has_value());
    CHECK(sep->length() <= n * n);
    CHECK(big.accepts(*sep));
    CHECK(!small.accepts(*sep));
  }
}

TEST_CASE("random DFAs are deterministic in the seed and fully reachable") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Dfa a = random_dfa(3, kAB, seed);
    Dfa b = random_dfa(3, kAB, seed);
    CHECK(isomorphic(a, b));
    // reachability: every state appears on some run of length < n
    std::set<State> seen{1};
    std::vector<State> frontier{1};
    while (!frontier.empty()) {
      State q = frontier.back();
      frontier.pop_back();
      for (SymbolId s = 0; s < kAB.size(); ++s)
        if (seen.insert(a.delta(q, s)).second)
          frontier.push_back(a.delta(q, s));
    }
    CHECK(seen.size() == 3);
  }
  CHECK(!isomorphic(random_dfa(3, kAB, 1), random_dfa(3, kAB, 99)));
}

TEST_CASE("positive sampling stays inside the language and the length range") {
  Dfa a = even_b();
  auto words = sample_positive_words(a, 25, 2, 6, 5);
  CHECK(!words.empty());
  CHECK(words.size() <= 25);
  for (const Word& u : words) {
    CHECK(a.accepts(u));
    CHECK(u.length() >= 2);
    CHECK(u.length() <= 6);
  }
  CHECK(sample_positive_words(a, 25, 2, 6, 5) == words);
  CHECK_THROWS_AS(sample_positive_words(empty_dfa(kAB), 5, 0, 4, 1), Error);
}

TEST_CASE("dot round-trip preserves the language") {
  Dfa a = random_dfa(4, kAB, 11);
  Dfa back = parse_dot(emit_dot(a));
  CHECK(same_language(a, back));
  CHECK(back.num_states() == a.num_states());
}

TEST_CASE("json round-trip preserves the machine exactly") {
  Dfa a = random_dfa(4, kAB, 12);
  Dfa back = dfa_from_json(to_json(a));
  CHECK(isomorphic(a, back));
  CHECK(back.alphabet() == kAB);
}
