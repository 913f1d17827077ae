// Hermite and Smith normal forms over Z, plus the sublattice helpers built on them.
#pragma once

#include "leech/exact.hpp"

namespace leech {

struct HermiteResult {
  IntMatrix h;  ///< row-style HNF: U * M = H
  IntMatrix u;  ///< unimodular
  std::size_t rank = 0;
};

/// Row-style Hermite normal form. Pivots are positive, entries above a pivot
/// lie in [0, pivot), zero rows come last.
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SmithResult {
  IntMatrix s;  ///< U * M * V = S, diagonal, d1 | d2 | ..., nonnegative
  IntMatrix u;
  IntMatrix v;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Basis (as rows) of the Z-module spanned by the rows of `m`, in HNF.
IntMatrix row_module_basis(const IntMatrix& m);

/// Rows spanning {x in Z^n : x * m = 0} where m is n x k, in HNF.
IntMatrix integer_kernel(const IntMatrix& m);

/// HNF basis of {u in Z^n : coeffs . u = 0 mod modulus}.
IntMatrix congruence_sublattice(const IntVector& coeffs, const Int& modulus);

/// Module spanned by rational rows (scaled by the common denominator, reduced, scaled back).
RatMatrix rational_row_module_basis(const RatMatrix& m);

}  // namespace leech
