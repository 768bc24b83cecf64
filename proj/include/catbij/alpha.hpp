#pragma once

// The recursive bijection: read off the construction term of a shape in one
// family and evaluate it in another.

#include "catbij/model.hpp"
#include "catbij/terms.hpp"

namespace catbij {

template <ConstructibleShape To, ConstructibleShape From>
To alpha(const From& shape) {
  return eval<To>(term_of(shape));
}

// `to` must be T, S or A, and `shape` must hold one of those families.
AnyShape alpha(Family to, const AnyShape& shape);

}  // namespace catbij
