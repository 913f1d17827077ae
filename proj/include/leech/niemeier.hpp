// The 23 Niemeier lattices with roots, assembled from component root lattices
// and glue generators, with their code N/<R>, Coxeter number and Weyl vector.
#pragma once

#include <string>

#include "leech/codec.hpp"
#include "leech/enumerate.hpp"
#include "leech/roots.hpp"

namespace leech {

/// Glue data of one Niemeier lattice. Components are listed in canonical
/// order (E before D before A, larger rank first); glue vectors are rational
/// vectors over the concatenated simple roots of the components.
struct GlueData {
  std::string label;
  std::vector<ADEType> components;
  std::vector<RatVector> glue;
};

/// Current version of the glue data file format.
inline constexpr int kGlueFormatVersion = 1;

/// Reads a glue data document. Throws std::invalid_argument on a malformed
/// document, an unknown version, or duplicate ADE types.
std::vector<GlueData> parse_glue_document(const codec::Json& doc);
std::vector<GlueData> load_glue_file(const std::string& path);
/// Path of the bundled glue file (compile-time default, overridable with LEECH_GLUE_FILE).
std::string default_glue_path();

/// "A7^2D5^2" style label -> component multiset in canonical order.
std::vector<ADEType> parse_label(const std::string& label);
/// Conventional label: A, D, E families in that order, larger rank first.
std::string format_label(const std::vector<ADEType>& components);

/// Residue class of N/<R> as its image in A_1 x ... x A_K.
struct Codeword {
  std::vector<IntVector> classes;  ///< one residue vector per component
  auto operator<=>(const Codeword&) const = default;
  bool operator==(const Codeword&) const = default;
};

class NiemeierLattice {
 public:
  const std::string& label() const { return label_; }
  const std::vector<ADEType>& types() const { return types_; }
  const RootComponent& component(std::size_t i) const { return *components_[i]; }
  std::size_t component_count() const { return components_.size(); }
  /// First simple-root coordinate of component i.
  std::size_t offset(std::size_t i) const { return offsets_[i]; }

  /// Gram of N^- in its integral basis.
  const LatticeDesc& lattice() const { return lattice_; }
  const IntMatrix& gram() const { return lattice_.gram(); }
  /// Rows: basis of N^- in simple-root coordinates.
  const RatMatrix& basis() const { return basis_; }
  /// Block-diagonal Cartan Gram of <R>.
  const IntMatrix& root_gram() const { return root_gram_; }

  const Int& coxeter() const { return coxeter_; }
  /// Weyl vector in N-coordinates.
  const IntVector& rho() const { return rho_; }
  const std::vector<Codeword>& codewords() const { return codewords_; }
  std::size_t root_count() const { return root_count_; }

  /// Simple root k (global index) in N-coordinates.
  IntVector simple_root(std::size_t k) const;
  /// Highest root of component i in N-coordinates.
  IntVector highest_root(std::size_t i) const;

  RatVector to_theta(const RatVector& n_coords) const;
  RatVector to_n(const RatVector& theta) const;
  /// Throws InvariantError when the vector is not in N^-.
  IntVector to_n_integral(const RatVector& theta, const std::string& check) const;
  /// Class in A_1 x ... x A_K of a vector of <R>^dual (simple-root coordinates).
  Codeword class_of(const RatVector& theta) const;
  Codeword add(const Codeword& a, const Codeword& b) const;

  friend NiemeierLattice assemble_niemeier(const GlueData& glue, const EnumOptions& opts);

 private:
  NiemeierLattice(LatticeDesc lattice) : lattice_(std::move(lattice)) {}

  std::string label_;
  std::vector<ADEType> types_;
  std::vector<const RootComponent*> components_;
  std::vector<std::size_t> offsets_;
  LatticeDesc lattice_;
  RatMatrix basis_;
  RatMatrix basis_inverse_;
  IntMatrix root_gram_;
  Int coxeter_;
  IntVector rho_;
  std::vector<Codeword> codewords_;
  std::size_t root_count_ = 0;
};

/// Builds N^- = <R> + glue and verifies every invariant: glue in <R>^dual,
/// even, unimodular, rank 24, equal Coxeter numbers, exactly 24h roots all in
/// <R>, recovered root type equal to the label, |code|^2 = det <R>, rho in N^-
/// with <rho, rho> = -2h(h+1). Throws InvariantError naming the failed check.
NiemeierLattice assemble_niemeier(const GlueData& glue, const EnumOptions& opts = {});

/// Full transversal of N/<R>, sorted by component classes.
std::vector<Codeword> enumerate_codewords(const NiemeierLattice& n);

/// v_gamma = sum of the component canonical representatives, in N-coordinates.
/// Throws InvariantError if it is not integral in N or not in the class gamma.
IntVector canonical_representative(const NiemeierLattice& n, const Codeword& gamma);

struct WeylData {
  Int h;
  IntVector rho;  ///< N-coordinates
};

WeylData weyl_data(const NiemeierLattice& n);

/// Matrix export: gram, basis and invariants.
codec::Json export_niemeier(const NiemeierLattice& n);
/// Text export as a GAP-style record.
std::string export_niemeier_gap(const NiemeierLattice& n);

/// Lookup helper: assembles the lattice with the given label from a glue set.
/// Throws std::invalid_argument listing the valid labels when absent.
const GlueData& find_glue(const std::vector<GlueData>& all, const std::string& label);

}  // namespace leech
