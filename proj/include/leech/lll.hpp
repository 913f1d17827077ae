// Exact LLL reduction driven by the Gram matrix.
#pragma once

#include "leech/lattice.hpp"

namespace leech {

/// Gram-Schmidt data of a positive-definite Gram matrix:
/// q(x) = sum_i b[i] * (x_i + sum_{j>i} mu(j, i) x_j)^2.
struct GramSchmidt {
  RatMatrix mu;  ///< lower triangular, unit diagonal
  RatVector b;   ///< squared lengths of the orthogonalised vectors
};

GramSchmidt gram_schmidt(const IntMatrix& positive_gram);

struct LllResult {
  LatticeDesc reduced;  ///< Gram of T * basis, same signature as the input
  IntMatrix transform;  ///< T, unimodular
};

/// LLL with Lovasz parameter `delta` (default 99/100) in exact rational
/// arithmetic. Negative-definite input is reduced through its negation.
/// Throws std::invalid_argument for a hyperbolic lattice.
LllResult lll_reduce(const LatticeDesc& lattice, const Rat& delta = Rat(99, 100));

/// True when the Gram matrix is size-reduced and satisfies the Lovasz condition.
bool is_lll_reduced(const IntMatrix& positive_gram, const Rat& delta = Rat(99, 100));

}  // namespace leech
