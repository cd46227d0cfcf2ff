#pragma once

// Brute-force enumeration oracles used by the check command, the benchmark
// verdict column, and the test suite. Exhaustive, so only usable at small
// bounds; the guard helpers say when.

#include <functional>
#include <optional>

#include "occlearn/dfa.hpp"
#include "occlearn/ltlf.hpp"
#include "occlearn/sample.hpp"

namespace occlearn {

/// Calls fn on every complete DFA with exactly n states (all transition
/// tables times all final-state sets). Count is n^(n*|sigma|) * 2^n.
void enumerate_complete_dfas(std::uint32_t n, const Alphabet& sigma,
                             const std::function<void(const Dfa&)>& fn);

/// Whether the exhaustive DFA search at this bound is tractable.
bool dfa_oracle_feasible(std::uint32_t bound, const Alphabet& sigma);

/// A DFA with at most `bound` states accepting every positive whose language
/// is strictly below L(a); absent iff a is language-minimal within the bound.
std::optional<Dfa> find_smaller_description(const Dfa& a, const Sample& s,
                                            std::uint32_t bound);

/// All formulas whose syntax DAG has at most max_size nodes, built from the
/// given connectives and the alphabet's atoms (deduplicated by structure).
std::vector<LtlfFormula> enumerate_formulas(std::uint32_t max_size,
                                            const Alphabet& sigma,
                                            const std::vector<LtlfOp>& ops);

bool ltlf_oracle_feasible(std::uint32_t bound, const Alphabet& sigma);

/// A formula of size at most `bound` satisfied by every positive that
/// strictly implies phi; absent iff phi is language-minimal within the bound.
std::optional<LtlfFormula> find_stricter_formula(const LtlfFormula& phi,
                                                 const Sample& s,
                                                 std::uint32_t bound,
                                                 const std::vector<LtlfOp>& ops);

}  // namespace occlearn
