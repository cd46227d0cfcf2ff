#include "occlearn/sample.hpp"

#include <fstream>
#include <sstream>

#include "occlearn/error.hpp"

namespace occlearn {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

Word parse_word_line(const std::string& line, const Alphabet& sigma,
                     std::size_t lineno) {
  std::vector<SymbolId> syms;
  if (line.empty()) return Word{};
  if (line.find(',') == std::string::npos && !sigma.id_of(line) &&
      sigma.all_single_char()) {
    // unseparated single-character spelling, e.g. "ab" for "a,b"
    for (char c : line) {
      auto id = sigma.id_of(std::string(1, c));
      if (!id) throw ParseError("unknown symbol '" + std::string(1, c) + "'", lineno);
      syms.push_back(*id);
    }
    return Word(std::move(syms));
  }
  for (const auto& tok : split(line, ',')) {
    if (tok.empty()) throw ParseError("empty symbol in word", lineno);
    auto id = sigma.id_of(tok);
    if (!id) throw ParseError("unknown symbol '" + tok + "'", lineno);
    syms.push_back(*id);
  }
  return Word(std::move(syms));
}

}  // namespace

Sample parse_sample(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<Alphabet> sigma;
  // header
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string prefix = "alphabet:";
    if (t.rfind(prefix, 0) != 0)
      throw ParseError("expected 'alphabet:' header", lineno);
    auto names = split(t.substr(prefix.size()), ',');
    for (auto& n : names)
      if (n.empty()) throw ParseError("empty symbol name in alphabet", lineno);
    try {
      sigma.emplace(std::move(names));
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
    break;
  }
  if (!sigma) throw ParseError("missing 'alphabet:' header", lineno ? lineno : 1);

  Sample sample{*sigma, {}};
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (!t.empty() && t[0] == '#') continue;
    sample.positives.insert(parse_word_line(t, sample.alphabet, lineno));
  }
  return sample;
}

Sample parse_sample(const std::string& text) {
  std::istringstream in(text);
  return parse_sample(in);
}

Sample load_sample(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open sample file '" + path + "'");
  return parse_sample(in);
}

std::string serialize_sample(const Sample& sample) {
  std::string out = "alphabet: ";
  for (std::size_t i = 0; i < sample.alphabet.size(); ++i) {
    if (i) out += ",";
    out += sample.alphabet.name(static_cast<SymbolId>(i));
  }
  out += "\n";
  for (const auto& w : sample.positives) out += w.str(sample.alphabet) + "\n";
  return out;
}

std::set<Word> prefixes(const std::set<Word>& words) {
  std::set<Word> out;
  for (const auto& w : words)
    for (std::size_t len = 0; len <= w.length(); ++len) out.insert(w.prefix(len));
  return out;
}

std::optional<Word> shortest_not_covered(
    const std::set<Word>& words,
    const std::function<bool(const Word&)>& member) {
  std::optional<Word> best;
  for (const auto& w : words) {
    if (member(w)) continue;
    if (!best || shortlex_less(w, *best)) best = w;
  }
  return best;
}

}  // namespace occlearn
