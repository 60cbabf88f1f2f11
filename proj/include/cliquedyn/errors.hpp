#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquedyn {

/// A precondition on an argument was violated (bad order, non-edge, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A configured resource cap tripped; `partial` is how far the work got.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t partial)
      : std::runtime_error(what), partial_(partial) {}
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

}  // namespace cliquedyn
