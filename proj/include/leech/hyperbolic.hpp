// The rank-26 lattice L_N = U + N^- in (a, b, v) coordinates, its Weyl vector
// w_N, section vectors s_gamma, the orthogonal-complement oracle, and
// deep-hole checks in L_Lambda = U + Lambda^-.
//
// <(a, b, v), (a', b', v')> = ab' + a'b + <v, v'>.
#pragma once

#include <optional>

#include "leech/codec.hpp"
#include "leech/niemeier.hpp"

namespace leech {

struct HypVector {
  Rat a;
  Rat b;
  RatVector v;

  bool operator==(const HypVector&) const = default;
  /// (a, b, v_1, ..., v_n)
  RatVector coordinates() const;
  bool is_integral() const;
};

HypVector make_hyp(const Int& a, const Int& b, const IntVector& v);
/// Pairing with <v, v'> given by `gram`.
Rat hyp_pair(const IntMatrix& gram, const HypVector& x, const HypVector& y);
std::string to_string(const HypVector& x);

/// U + N^- as a 26 x 26 Gram; checks even and |det| = 1.
LatticeDesc build_LN(const NiemeierLattice& n);

/// f_N = (1, 0, 0) and z_N = (-1, 1, 0).
HypVector f_vector(std::size_t dim);
HypVector z_vector(std::size_t dim);

/// w_N = (h + 1, h, rho). Asserts that it is isotropic and pairs to 1 with
/// z_N, every simple root and every theta_i = (1, 0, -mu_i).
HypVector weyl_vector_LN(const NiemeierLattice& n);

/// s_gamma = (-1 - n_gamma/2, 1, v_gamma), with its norm and pairings asserted.
HypVector section_vector(const NiemeierLattice& n, const Codeword& gamma);

/// All r with <f_N, r> = <w_N, r> = 1 and <r, r> = -2, sorted by v.
/// Throws InvariantError when the count differs from |code|.
std::vector<HypVector> enumerate_section_classes(const NiemeierLattice& n, const EnumOptions& opts = {});

struct Orthocomplement {
  LatticeDesc lattice;  ///< Gram of {x : <x, w> = <x, s> = 0}
  IntMatrix basis;      ///< rows in (a, b, v) coordinates
  IntMatrix projection; ///< rows: the v-parts of `basis`
};

/// Integral basis of the orthogonal complement of {w, s} in L; requires <w, s> = 1.
/// The complement must be even and unimodular.
Orthocomplement orthocomplement_gram(const LatticeDesc& l, const HypVector& w, const HypVector& s);

struct DeepHoleInput {
  IntMatrix gram;   ///< negative-definite Leech Gram
  RatVector center; ///< coordinates in the basis of `gram`
  std::optional<std::vector<ADEType>> declared_type;
  std::optional<Int> declared_coxeter;
};

inline constexpr int kDeepHoleFormatVersion = 1;

/// Throws std::invalid_argument for a malformed document.
DeepHoleInput parse_deep_hole(const codec::Json& doc);
DeepHoleInput load_deep_hole(const std::string& path);
codec::Json encode_deep_hole(const DeepHoleInput& d);

/// One connected component of Xi_0(c).
struct XiComponent {
  ADEType type;
  std::vector<std::size_t> nodes;  ///< indices into xi0
  IntVector m;
};

struct DeepHoleReport {
  bool input_valid = false;
  std::string input_error;
  std::optional<Rat> distance_sq;  ///< empty when no lattice point lies within sqrt(2)
  bool deep_hole = false;
  Int coxeter;
  std::vector<ADEType> type;
  std::optional<bool> declared_type_matches;
  std::optional<bool> declared_coxeter_matches;
  bool affine_components = false;
  bool primitive = false;
  bool msum = false;
  bool thetais = false;
  std::vector<Point> xi0;  ///< P_0(c)
  std::vector<XiComponent> components;
  std::size_t xi1_count = 0;

  bool passed() const;
  codec::Json to_json() const;
};

/// P_nu(c) = {lambda : |q(lambda - c)| = 2(1 + nu/h)}.
std::vector<Point> p_nu(const LatticeDesc& leech, const RatVector& c, const Int& h, unsigned nu,
                        const EnumOptions& opts = {});
/// r_lambda = (-1 - lambda^2/2, 1, lambda).
HypVector leech_root(const IntMatrix& gram, const Point& lambda);
/// f(c) = h (-<c, c>/2, 1, c).
HypVector f_of_center(const IntMatrix& gram, const RatVector& c, const Int& h);

/// Distance, primitivity, Xi_0 / Xi_1 structure, msum and thetais. A point
/// that is not a deep hole is reported, not thrown.
DeepHoleReport deep_hole_checks(const DeepHoleInput& d, const EnumOptions& opts = {});

}  // namespace leech
