#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "occlearn/alphabet.hpp"
#include "occlearn/word.hpp"

namespace occlearn {

/// Positive examples over a shared alphabet. Words are kept deduplicated in
/// shortlex order so that iteration is deterministic.
struct Sample {
  Alphabet alphabet;
  std::set<Word> positives;

  bool contains_empty_word() const {
    for (const auto& w : positives)
      if (w.empty()) return true;
    return false;
  }
};

/// Reads the sample text format:
///   line 1:  alphabet: <name>(,<name>)*
///   each further non-comment line is one word (comma-separated names, or an
///   unseparated run of single characters when every alphabet name is a
///   single character); an empty line denotes the empty word.
///   Lines starting with '#' are comments.
Sample parse_sample(std::istream& in);
Sample parse_sample(const std::string& text);
Sample load_sample(const std::string& path);

std::string serialize_sample(const Sample& sample);

/// Prefix closure: all prefixes (including the empty word and the words
/// themselves) of every word in the set. The empty input has no prefixes.
std::set<Word> prefixes(const std::set<Word>& words);

/// A shortest word of `words` rejected by `member`, shortlex tie-break;
/// absent when every word is covered.
std::optional<Word> shortest_not_covered(
    const std::set<Word>& words, const std::function<bool(const Word&)>& member);

}  // namespace occlearn
