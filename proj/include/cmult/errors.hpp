#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmult {

/// A caller violated an operation's precondition (bad parameter, range,
/// parity, threshold). Maps to CLI exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Group closure grew past the configured element cap. Maps to exit code 3.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::size_t cap, std::size_t partial)
      : std::runtime_error("group closure exceeded cap of " + std::to_string(cap) +
                           " elements (" + std::to_string(partial) + " found so far)"),
        cap_(cap),
        partial_(partial) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

/// Malformed generator input. Maps to exit code 4.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cmult
