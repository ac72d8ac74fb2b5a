#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "macdonald/scalars.hpp"

namespace macdonald {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Solves A X = B exactly by fraction-free (Bareiss) elimination with
/// first-nonzero pivoting. A is square; B has one column per right-hand side.
/// Returns nullopt when A is singular.
std::optional<ScalarMatrix> solve_exact(ScalarMatrix a, ScalarMatrix b);

/// Exact inverse, or nullopt when singular.
std::optional<ScalarMatrix> invert_exact(const ScalarMatrix& a);

}  // namespace macdonald
