#pragma once

#include <cstdint>
#include <vector>

#include "monodyn/matrix.hpp"

namespace monodyn {

// Coefficients of det(lambda*I - A), monic, in descending degree order
// (length n+1).  Computed division-free over exact integers with the
// Berkowitz recurrence on leading principal blocks.
std::vector<BigInt> characteristic_polynomial(const CountMatrix& a);

// Rank over the rationals of an n x n integer matrix given in row-major
// order, via fraction-free (Bareiss) elimination.
std::uint32_t integer_matrix_rank(std::vector<BigInt> cells, std::uint32_t n);

}  // namespace monodyn
