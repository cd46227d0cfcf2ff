#pragma once

// Sample sources shared by gen-sample and the benchmark harness.

#include <cstdint>
#include <string>

#include "occlearn/ltlf.hpp"
#include "occlearn/sample.hpp"

namespace occlearn::cli {

struct GenSpec {
  std::size_t count = 20;
  std::size_t min_len = 1;
  std::size_t max_len = 10;
  std::uint64_t seed = 0;
  bool warn = true;  // stderr note when fewer distinct words exist
};

Alphabet parse_alphabet(const std::string& csv);

/// Distinct words satisfying phi with lengths in range: exhaustive when the
/// range is small, seeded rejection sampling otherwise. Throws when no word
/// qualifies.
std::set<Word> formula_words(const LtlfFormula& phi, const GenSpec& spec);

/// Sample drawn from a seeded random DFA of the given size.
Sample random_dfa_sample(std::uint32_t dfa_size, const Alphabet& sigma,
                         const GenSpec& spec);

/// Synthetic flight traces over battery-state x maneuver features; glide
/// implies low battery and low battery is absorbing.
Sample trace_sample(const GenSpec& spec);

}  // namespace occlearn::cli
