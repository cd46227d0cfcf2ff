#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "occlearn/error.hpp"

namespace occlearn {

using SymbolId = std::uint32_t;

/// Ordered set of distinct symbol names. Iteration order equals declaration
/// order and symbol ids are 0-based positions in that order.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("alphabet must be nonempty");
    for (SymbolId i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw Error("empty symbol name");
      if (!index_.emplace(names_[i], i).second)
        throw Error("duplicate symbol '" + names_[i] + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(SymbolId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<SymbolId> id_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool all_single_char() const {
    for (const auto& n : names_)
      if (n.size() != 1) return false;
    return true;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> index_;
};

}  // namespace occlearn
