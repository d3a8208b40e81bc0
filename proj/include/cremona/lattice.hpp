#pragma once

#include <vector>

#include "cremona/int_matrix.hpp"

namespace cremona {

using IntVector = std::vector<Integer>;

/// Basis of the integer kernel {x in Z^n : A x = 0}, read off the Smith form
/// transforms. The kernel of an integer matrix is saturated, so the basis spans
/// every integer solution.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// In-place LLL reduction (exact rational Gram-Schmidt, Lovasz constant 3/4).
/// Input vectors must be linearly independent.
void lll_reduce(std::vector<IntVector>& basis);

} // namespace cremona
