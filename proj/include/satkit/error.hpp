#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satkit {

// Raised by every text reader in the toolkit. line() is 1-based; 0 means the
// error is not attached to a particular line (e.g. premature end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A solve gave up because its conflict or time budget ran out.
class SolveInterrupted : public std::runtime_error {
 public:
  SolveInterrupted() : std::runtime_error("solver budget exhausted") {}
};

}  // namespace satkit
