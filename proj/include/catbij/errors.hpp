#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace catbij {

// One violated invariant. `locus` names the offending part of the shape
// (node path, rectangle index, arc pair, ...).
struct Violation {
  std::string locus;
  std::string message;

  bool operator==(const Violation&) const = default;
};

std::string describe(const std::vector<Violation>& violations);

// A constructor was applied outside its domain (e.g. f_L on an f_M image).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation received a shape that fails validation.
class InvalidShape : public std::invalid_argument {
 public:
  explicit InvalidShape(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Parsed text that is well-formed but describes an invalid value.
class InvariantError : public InvalidShape {
 public:
  using InvalidShape::InvalidShape;
};

// Malformed literal; `offset` is the byte position of the problem.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& what);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace catbij
