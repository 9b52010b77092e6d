#pragma once

#include <vector>

#include "artin/poly_matrix.hpp"

namespace artin {

/// U * A * V = D with U, V invertible over R and D diagonal, its nonzero
/// entries normalized (valuation 0, monic) and forming a divisibility chain.
struct SmithDecomposition {
  PolyMatrix u;
  PolyMatrix d;
  PolyMatrix v;
  /// Nonzero diagonal entries of d, in order.
  std::vector<LaurentPoly> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

struct SmithOptions {
  /// Skip accumulating U and V when only the invariant factors are needed.
  bool with_transforms = true;
};

/// Smith normal form over A[q, q^-1] for a field A, by Euclidean reduction on
/// span. Throws UnsupportedDomain over Z.
SmithDecomposition smith_normal_form(const PolyMatrix& a, SmithOptions options = {});

}  // namespace artin
