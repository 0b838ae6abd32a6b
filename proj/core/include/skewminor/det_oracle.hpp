#pragma once

#include <cstddef>

#include "skewminor/scalar.hpp"
#include "skewminor/skew_matrix.hpp"

namespace skewminor {

/// Largest dimension det_cofactor accepts (its cost is factorial).
inline constexpr std::size_t kCofactorMaxDim = 8;

/// Determinant by recursive expansion along the first row. The 0 x 0
/// determinant is 1. Throws std::invalid_argument for non-square input or
/// dimension above kCofactorMaxDim. Works over every ring.
[[nodiscard]] Scalar det_cofactor(const GeneralMatrix& m);

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Throws UnsupportedRing for Z/m with m composite.
[[nodiscard]] Scalar det_bareiss(const GeneralMatrix& m);

}  // namespace skewminor
