// Fincke-Pohst enumeration of lattice vectors in definite lattices, around
// the origin or around a rational center.
//
// The tree search runs on an exact rational Gram-Schmidt decomposition of the
// LLL-reduced form, converted to doubles for interval pruning only; pruning
// intervals are widened by a safety margin and every candidate leaf is
// accepted or rejected by an exact integer evaluation of the form.
#pragma once

#include <cstdint>
#include <map>

#include "leech/lattice.hpp"

namespace leech {

using Point = std::vector<std::int64_t>;

struct EnumOptions {
  unsigned jobs = 1;  ///< worker threads; output does not depend on it
};

/// All x != 0 with |q(x)| <= bound, sorted lexicographically. Closed under negation.
/// Throws std::invalid_argument when bound <= 0 or the lattice is not definite.
std::vector<Point> short_vectors(const LatticeDesc& lattice, const Int& bound, const EnumOptions& opts = {});

/// Number of nonzero vectors per value of |q|, for |q| <= bound.
std::map<Int, std::size_t> norm_counts(const LatticeDesc& lattice, const Int& bound, const EnumOptions& opts = {});

/// All x with |q(x - center)| == target, sorted lexicographically.
std::vector<Point> affine_shell(const LatticeDesc& lattice, const RatVector& center, const Rat& target,
                                const EnumOptions& opts = {});

struct NearPoint {
  Point x;
  Rat norm;  ///< |q(x - center)|
};

/// All x with |q(x - center)| <= bound, sorted lexicographically by x.
std::vector<NearPoint> points_near(const LatticeDesc& lattice, const RatVector& center, const Rat& bound,
                                   const EnumOptions& opts = {});

IntVector to_int_vector(const Point& p);
RatVector to_rat_vector(const Point& p);
/// Throws std::out_of_range if an entry does not fit in 64 bits.
Point to_point(const IntVector& v);

}  // namespace leech
