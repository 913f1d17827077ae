// Simply-laced root systems: Cartan Gram matrices, simple-system extraction,
// Dynkin type recognition, highest roots, Coxeter numbers, Weyl vectors and
// canonical representatives of discriminant classes.
//
// Sign convention: root lattices are negative-definite, <r, r> = -2, and
// adjacent simple roots pair to +1.
//
// Node numbering (0-based):
//   A_n : path 0 - 1 - ... - (n-1)
//   D_n : path 0 - ... - (n-2), node n-1 attached to node n-3
//   E_n : path 0 - ... - (n-2), node n-1 attached to node 2
#pragma once

#include <string>

#include "leech/enumerate.hpp"
#include "leech/lattice.hpp"

namespace leech {

enum class Family { A, D, E };

struct ADEType {
  Family family = Family::A;
  int rank = 1;

  auto operator<=>(const ADEType&) const = default;
};

/// Throws std::invalid_argument for A_0, D_{<4}, E_{not 6,7,8}.
ADEType make_ade(Family family, int rank);
std::string to_string(const ADEType& t);
/// Parses "A1", "D16", "E8".
ADEType parse_ade(const std::string& text);
/// Order used for component lists: (family, rank) descending, i.e. E before D before A.
bool canonical_before(const ADEType& a, const ADEType& b);

LatticeDesc cartan_gram(const ADEType& t);
/// Gram of the extended diagram: cartan_gram plus the extending node, last.
IntMatrix extended_cartan_gram(const ADEType& t);

/// A simple root system split into connected components; roots are integer
/// coordinate vectors in whatever basis the input root set used.
struct SimpleSystem {
  std::vector<std::vector<IntVector>> components;
};

/// Simple roots of the root system `roots` (all norm -2 vectors of a
/// negative-definite lattice with Gram `gram`). Positive roots are those whose
/// first nonzero coordinate is positive. Components are ordered by their
/// smallest root.
SimpleSystem extract_simple_system(const std::vector<IntVector>& roots, const IntMatrix& gram);

struct IdentifiedComponent {
  ADEType type;
  /// order[k] = index (within the component) of the root playing template node k.
  std::vector<std::size_t> order;
};

/// Type of a connected ordinary diagram given by its pairing matrix.
/// Throws InvariantError("roots", "dynkin-type", ...) when it is not ADE.
IdentifiedComponent identify_component(const IntMatrix& pairing);

/// Types of all components, sorted by `canonical_before`.
std::vector<ADEType> identify_ade_decomposition(const SimpleSystem& theta, const IntMatrix& gram);

/// One connected component, in its own coordinates (simple roots = unit vectors).
struct RootComponent {
  ADEType type;
  LatticeDesc lattice;          ///< negative-definite Cartan Gram
  IntVector m;                  ///< m on the extended diagram; m[rank] is the extending node
  IntVector highest_root;       ///< coefficients of mu in the simple roots
  Int coxeter;                  ///< h
  RatVector weyl;               ///< rho_i in simple-root coordinates
  DiscriminantGroup disc;
  std::vector<std::size_t> j_set;       ///< nodes with m = 1
  std::vector<IntVector> j_classes;     ///< class of r_j^dual for j in j_set
  std::size_t root_count = 0;           ///< number of norm -2 vectors

  std::size_t rank() const { return static_cast<std::size_t>(type.rank); }
};

struct HighestRoot {
  IntVector highest_root;  ///< coefficients over the simple roots
  IntVector m;             ///< kernel generator on the extended diagram
};

/// m as the positive primitive generator of the kernel of the extended Gram.
HighestRoot highest_root_and_m(const ADEType& t);

enum class CoxeterMode { RootCount, WeylNorm, HighestRoot, CoxeterElement };

/// h computed by a single characterisation.
Int coxeter_number(const ADEType& t, CoxeterMode mode);
/// h computed all four ways; throws InvariantError("roots", "coxeter-agreement", ...) on disagreement.
Int coxeter_number(const ADEType& t);

/// rho_i: <rho_i, r> = 1 for every simple root (simple-root coordinates).
RatVector weyl_vector_component(const ADEType& t);

/// Builds and caches the component. Thread-safe.
const RootComponent& root_component(const ADEType& t);

/// Canonical representative of a class of the component's discriminant group:
/// 0 for the zero class, otherwise r_j^dual for the unique j with m(r_j) = 1 in
/// that class. Throws std::invalid_argument for a malformed class.
RatVector canonical_rep_component(const RootComponent& c, const IntVector& alpha);

/// Reflection matrix of simple root k acting on simple-root coordinates.
IntMatrix reflection_matrix(const IntMatrix& gram, std::size_t k);

}  // namespace leech
