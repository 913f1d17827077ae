// Lambda^-(gamma) from a Niemeier lattice N and a codeword gamma, the gamma = 0
// congruence form, and the rootless even unimodular certification.
#pragma once

#include <optional>

#include "leech/codec.hpp"
#include "leech/hyperbolic.hpp"
#include "leech/niemeier.hpp"

namespace leech {

struct ConstructedLattice {
  std::string label;
  std::size_t codeword_index = 0;
  Codeword gamma;
  IntMatrix basis;     ///< rows: basis of Lambda^-(gamma) in N-coordinates (HNF)
  LatticeDesc lattice; ///< the modified form on `basis`
  Int h;
  IntVector rho;
  IntVector v_gamma;
  Int n_gamma;
  Int a_gamma;
  RatVector alpha0;    ///< alpha_0(u) = alpha0 . u
  RatVector alpha1;
  Int index;           ///< [N^- : Lambda^-(gamma)]
};

/// alpha_0(u) = <h v - rho, u>/a, alpha_1 = (1 + n/2) alpha_0 - <v, u>, on
/// {u : alpha_0(u) in Z} with <u, u'> + alpha_0(u) alpha_1(u') + alpha_1(u) alpha_0(u').
ConstructedLattice construct_leech(const NiemeierLattice& n, const Codeword& gamma);

/// {u : <u, rho> = 0 mod 2h+1} with <u, u> + 2 <u, rho>^2 / (2h+1)^2.
/// Throws InvariantError unless it equals construct_leech(n, 0) exactly.
ConstructedLattice corollary_zero(const NiemeierLattice& n);

struct CertifyOptions {
  bool deep = false;  ///< also count vectors with |q| = 4
  EnumOptions enumeration;
};

struct LeechVerdict {
  std::size_t rank = 0;
  bool negative_definite = false;
  bool even = false;
  bool unimodular = false;
  std::size_t root_count = 0;
  bool rootless = false;
  std::optional<std::size_t> norm4_count;

  bool rank_ok() const { return rank == 24; }
  bool passed() const { return rank_ok() && negative_definite && even && unimodular && rootless; }
  codec::Json to_json() const;
};

LeechVerdict certify_leech(const LatticeDesc& l, const CertifyOptions& opts = {});

struct OracleAgreement {
  bool same_module = false;  ///< projection of the complement spans Lambda^-(gamma)
  bool same_gram = false;    ///< complement Gram = T G T^T with projection = T basis
  bool section_found = false;  ///< v_gamma is among the section-class projections
  bool passed() const { return same_module && same_gram && section_found; }
};

/// Cross-checks a construction against the orthogonal complement of
/// {w_N, s_gamma} in L_N and against the section classes.
OracleAgreement check_against_oracle(const NiemeierLattice& n, const ConstructedLattice& c,
                                     const std::vector<HypVector>& section_classes);

/// The same lattice with the form negated.
LatticeDesc negate(const LatticeDesc& l);

/// Lattice document: gram, signature, and provenance when it came from a construction.
codec::Json export_constructed(const ConstructedLattice& c, bool positive = false);
codec::Json export_lattice(const LatticeDesc& l, const std::string& kind);
std::string export_lattice_gap(const LatticeDesc& l, const std::string& name);
/// Reads any lattice document written by the exporters.
LatticeDesc import_lattice(const codec::Json& doc);

/// The deep hole of Lambda^-(gamma) attached to the isotropic vector f_N:
/// c = G^-1 (alpha_0(u_k))_k / h in the basis of the construction.
DeepHoleInput deep_hole_from_construction(const NiemeierLattice& n, const ConstructedLattice& c);

}  // namespace leech
