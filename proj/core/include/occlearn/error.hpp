#pragma once

#include <stdexcept>
#include <string>

namespace occlearn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text-format readers; carries a 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string msg, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace occlearn
