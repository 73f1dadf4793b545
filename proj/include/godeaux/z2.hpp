#pragma once

// Linear algebra over the two-element field.

#include <cstdint>
#include <vector>

namespace godeaux {

using BitVector = std::vector<std::uint8_t>;

/// Rows of 0/1 entries, all of the same length `cols`.
struct BitMatrix {
    int cols = 0;
    std::vector<BitVector> rows;
};

/// Basis of {x : M x = 0} over Z/2, one vector per free column, in reduced form.
std::vector<BitVector> z2_kernel(const BitMatrix& m);

int z2_rank(const BitMatrix& m);

}  // namespace godeaux
