#include "catbij/alpha.hpp"

namespace catbij {

AnyShape alpha(Family to, const AnyShape& shape) { return eval(to, term_of(shape)); }

}  // namespace catbij
