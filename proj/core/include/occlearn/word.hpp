#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "occlearn/alphabet.hpp"

namespace occlearn {

/// A finite sequence of symbol ids. Positions are 1-based: w[1..|w|].
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<SymbolId> syms) : syms_(std::move(syms)) {}

  std::size_t length() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }

  /// 1-based access.
  SymbolId at(std::size_t pos) const { return syms_.at(pos - 1); }

  const std::vector<SymbolId>& syms() const { return syms_; }

  Word prefix(std::size_t len) const {
    return Word(std::vector<SymbolId>(syms_.begin(), syms_.begin() + len));
  }

  Word append(SymbolId a) const {
    std::vector<SymbolId> s = syms_;
    s.push_back(a);
    return Word(std::move(s));
  }

  /// Length-then-lexicographic order over symbol ids; the tie-break order
  /// used by every shortest-word selection.
  friend bool shortlex_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.syms_ < b.syms_;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.syms_ == b.syms_;
  }
  friend bool operator<(const Word& a, const Word& b) {
    return a.syms_ < b.syms_;
  }

  std::string str(const Alphabet& sigma, const char* sep = ",") const {
    std::string out;
    for (std::size_t i = 0; i < syms_.size(); ++i) {
      if (i) out += sep;
      out += sigma.name(syms_[i]);
    }
    return out;
  }

 private:
  std::vector<SymbolId> syms_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (SymbolId s : w.syms()) {
      h ^= s + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace occlearn
