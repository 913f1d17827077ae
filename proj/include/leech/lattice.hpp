// Lattices given by an integral Gram matrix, and their discriminant groups.
#pragma once

#include <optional>

#include "leech/exact.hpp"

namespace leech {

enum class Signature { PositiveDefinite, NegativeDefinite, Hyperbolic };

std::string to_string(Signature s);
Signature parse_signature(const std::string& text);

/// A lattice given by its Gram matrix, optionally with a basis embedded in an
/// ambient rational space (rows = basis vectors) and the ambient form.
class LatticeDesc {
 public:
  LatticeDesc(IntMatrix gram, Signature signature);
  LatticeDesc(IntMatrix gram, Signature signature, RatMatrix basis, RatMatrix ambient_form);

  const IntMatrix& gram() const { return gram_; }
  Signature signature() const { return signature_; }
  std::size_t rank() const { return gram_.rows(); }
  bool is_even() const;
  bool is_definite() const { return signature_ != Signature::Hyperbolic; }
  const std::optional<RatMatrix>& basis() const { return basis_; }
  const std::optional<RatMatrix>& ambient_form() const { return ambient_form_; }
  Int determinant() const;
  bool is_unimodular() const { return abs(determinant()) == 1; }
  /// <x, y> for coordinate vectors in this lattice's basis.
  Rat pair(const RatVector& x, const RatVector& y) const;
  Int pair(const IntVector& x, const IntVector& y) const;

 private:
  IntMatrix gram_;
  Signature signature_;
  std::optional<RatMatrix> basis_;
  std::optional<RatMatrix> ambient_form_;
};

/// Detects a definite signature by exact elimination; throws std::invalid_argument
/// when the form is neither positive- nor negative-definite.
Signature definite_signature(const IntMatrix& gram);

/// M^dual / M presented by its invariant factors.
class DiscriminantGroup {
 public:
  /// Invariant factors d1 | d2 | ... , all > 1. Empty for a unimodular lattice.
  const std::vector<Int>& invariant_factors() const { return factors_; }
  /// One generator per invariant factor: rational coordinates (lattice basis)
  /// of a dual vector, reduced into [0, 1).
  const std::vector<RatVector>& generators() const { return generators_; }
  /// Rows of gram^-1: the dual basis r_j^dual in lattice coordinates.
  const RatMatrix& dual_basis() const { return dual_basis_; }
  Int order() const;

  /// Class of a dual vector (lattice coordinates) as residues modulo the
  /// invariant factors. Throws std::invalid_argument if x is not in M^dual.
  IntVector class_of(const RatVector& x) const;
  IntVector add(const IntVector& a, const IntVector& b) const;
  IntVector negate(const IntVector& a) const;
  IntVector zero() const { return IntVector(factors_.size(), 0); }
  bool is_zero(const IntVector& a) const;
  /// Order of a class in the group.
  Int order_of(const IntVector& a) const;

  friend DiscriminantGroup discriminant_group(const LatticeDesc& lattice);

 private:
  IntMatrix gram_;
  std::vector<Int> factors_;
  std::vector<std::size_t> factor_rows_;  // rows of the SNF left transform kept
  IntMatrix left_;                        // SNF left transform U
  std::vector<RatVector> generators_;
  RatMatrix dual_basis_;
};

/// Throws std::invalid_argument for a degenerate Gram matrix.
DiscriminantGroup discriminant_group(const LatticeDesc& lattice);

}  // namespace leech
