#include "gen.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "occlearn/dfa.hpp"
#include "occlearn/error.hpp"

namespace occlearn::cli {

Alphabet parse_alphabet(const std::string& csv) {
  std::vector<std::string> names;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) names.push_back(item);
  return Alphabet(names);
}

std::set<Word> formula_words(const LtlfFormula& phi, const GenSpec& spec) {
  const Alphabet& sigma = phi.alphabet();
  std::size_t min_len = std::max<std::size_t>(1, spec.min_len);
  if (spec.max_len < min_len) throw Error("empty length range");
  double total = 0;
  for (std::size_t len = min_len; len <= spec.max_len; ++len)
    total += std::pow(static_cast<double>(sigma.size()),
                      static_cast<double>(len));
  std::set<Word> matches;
  if (total <= 2e6) {
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; len <= spec.max_len; ++len) {
      std::vector<Word> next;
      for (const Word& w : frontier)
        for (SymbolId a = 0; a < sigma.size(); ++a) next.push_back(w.append(a));
      frontier = std::move(next);
      if (len < min_len) continue;
      for (const Word& w : frontier)
        if (satisfies(w, phi)) matches.insert(w);
    }
    if (matches.size() > spec.count) {
      std::vector<Word> all(matches.begin(), matches.end());
      std::mt19937_64 rng(spec.seed);
      std::shuffle(all.begin(), all.end(), rng);
      matches = std::set<Word>(all.begin(),
                               all.begin() + static_cast<long>(spec.count));
    }
  } else {
    std::mt19937_64 rng(spec.seed);
    std::size_t budget = 500 * spec.count + 10000;
    while (matches.size() < spec.count && budget-- > 0) {
      std::size_t len = min_len + rng() % (spec.max_len - min_len + 1);
      std::vector<SymbolId> syms;
      for (std::size_t i = 0; i < len; ++i)
        syms.push_back(static_cast<SymbolId>(rng() % sigma.size()));
      Word w(std::move(syms));
      if (satisfies(w, phi)) matches.insert(w);
    }
  }
  if (matches.empty())
    throw Error("no word in the length range satisfies the formula");
  if (spec.warn && matches.size() < spec.count)
    std::cerr << "warning: only " << matches.size() << " of " << spec.count
              << " requested distinct words exist in the range; emitting all "
                 "of them\n";
  return matches;
}

Sample random_dfa_sample(std::uint32_t dfa_size, const Alphabet& sigma,
                         const GenSpec& spec) {
  Dfa target = random_dfa(dfa_size, sigma, spec.seed);
  Sample s{sigma, sample_positive_words(target, spec.count, spec.min_len,
                                        spec.max_len, spec.seed + 1)};
  if (spec.warn && s.positives.size() < spec.count)
    std::cerr << "warning: only " << s.positives.size()
              << " distinct accepted words in the length range\n";
  return s;
}

Sample trace_sample(const GenSpec& spec) {
  Alphabet sigma({"ok_cruise", "low_cruise", "low_glide"});
  std::mt19937_64 rng(spec.seed);
  std::set<Word> out;
  std::size_t min_len = std::max<std::size_t>(1, spec.min_len);
  std::size_t budget = 200 * spec.count + 1000;
  while (out.size() < spec.count && budget-- > 0) {
    std::size_t len = min_len + rng() % (spec.max_len - min_len + 1);
    bool low = false;
    std::vector<SymbolId> syms;
    for (std::size_t i = 0; i < len; ++i) {
      if (!low && rng() % 5 == 0) low = true;
      if (!low) syms.push_back(0);
      else syms.push_back(rng() % 5 < 3 ? 2 : 1);
    }
    out.insert(Word(std::move(syms)));
  }
  if (spec.warn && out.size() < spec.count)
    std::cerr << "warning: only " << out.size()
              << " distinct traces in the length range\n";
  return Sample{sigma, std::move(out)};
}

}  // namespace occlearn::cli
