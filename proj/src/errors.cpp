#include "catbij/errors.hpp"

#include <sstream>

namespace catbij {

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) out << "; ";
    first = false;
    if (!v.locus.empty()) out << v.locus << ": ";
    out << v.message;
  }
  return out.str();
}

InvalidShape::InvalidShape(std::vector<Violation> violations)
    : std::invalid_argument("invalid shape: " + describe(violations)),
      violations_(std::move(violations)) {}

SyntaxError::SyntaxError(std::size_t offset, const std::string& what)
    : std::runtime_error("syntax error at byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

}  // namespace catbij
