#pragma once

#include <cstddef>
#include <vector>

#include "hcyl/laurent.hpp"

namespace hcyl {

using IntMatrix = std::vector<std::vector<Integer>>;

// Fraction-free (Bareiss) elimination. Both functions take the matrix by value
// and eliminate in place.
Integer determinant(IntMatrix m);
std::size_t rank(IntMatrix m);

}  // namespace hcyl
