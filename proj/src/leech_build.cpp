#include "leech/leech_build.hpp"

#include <algorithm>
#include <sstream>

#include "leech/normal_form.hpp"

namespace leech {

namespace {

[[noreturn]] void fail(const std::string& check, const std::string& detail) {
  throw InvariantError("leech-build", check, detail);
}

RatVector linear_form_on(const IntMatrix& basis, const RatVector& form) {
  RatVector out(basis.rows());
  for (std::size_t k = 0; k < basis.rows(); ++k) out[k] = dot(form, to_rational(basis.row_vector(k)));
  return out;
}

// basis * G * basis^T + x y^T + y x^T, which must be integral.
IntMatrix modified_gram(const IntMatrix& basis, const IntMatrix& g, const RatVector& x, const RatVector& y,
                        const std::string& label) {
  RatMatrix gram = to_rational(basis * g * basis.transpose());
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) gram(i, j) += x[i] * y[j] + y[i] * x[j];
  if (!is_integral(gram)) fail("integral-form", label);
  return to_integer(gram);
}

std::string gap_row(std::span<const Int> row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i].get_str();
  return s + "]";
}

}  // namespace

ConstructedLattice construct_leech(const NiemeierLattice& n, const Codeword& gamma) {
  const auto& words = n.codewords();
  auto it = std::lower_bound(words.begin(), words.end(), gamma);
  if (it == words.end() || *it != gamma) throw std::invalid_argument("construct_leech: not a codeword of " + n.label());
  const IntMatrix& g = n.gram();
  const std::size_t dim = g.rows();

  ConstructedLattice out{.label = n.label(),
                         .codeword_index = static_cast<std::size_t>(it - words.begin()),
                         .gamma = gamma,
                         .basis = {},
                         .lattice = LatticeDesc(IntMatrix::identity(1), Signature::PositiveDefinite),
                         .h = n.coxeter(),
                         .rho = n.rho(),
                         .v_gamma = canonical_representative(n, gamma),
                         .n_gamma = 0,
                         .a_gamma = 0,
                         .alpha0 = {},
                         .alpha1 = {},
                         .index = 0};
  const Int& h = out.h;
  out.n_gamma = n.lattice().pair(out.v_gamma, out.v_gamma);
  if (out.n_gamma % 2 != 0) fail("n-even", n.label());
  out.a_gamma = 2 * h + 1 + h * out.n_gamma / 2;
  if (out.a_gamma == 0) fail("a-nonzero", n.label());

  IntVector hv_rho(dim);
  for (std::size_t i = 0; i < dim; ++i) hv_rho[i] = h * out.v_gamma[i] - out.rho[i];
  IntVector c = g * hv_rho;
  IntVector gv = g * out.v_gamma;
  const Rat coeff = Rat(1) + Rat(out.n_gamma / 2);
  for (std::size_t i = 0; i < dim; ++i) {
    Rat a0(c[i], out.a_gamma);
    a0.canonicalize();
    out.alpha0.push_back(a0);
    out.alpha1.push_back(coeff * a0 - Rat(gv[i]));
  }

  out.basis = congruence_sublattice(c, abs(out.a_gamma));
  RatVector a0 = linear_form_on(out.basis, out.alpha0);
  RatVector a1 = linear_form_on(out.basis, out.alpha1);
  if (!is_integral(a0) || !is_integral(a1)) fail("alpha-integral", n.label());
  IntMatrix gram = modified_gram(out.basis, g, a0, a1, n.label());
  out.lattice = LatticeDesc(gram, definite_signature(gram));

  out.index = abs(determinant(out.basis));
  Int expected = abs(out.a_gamma) / gcd(gcd_of(c), abs(out.a_gamma));
  if (out.index != expected) fail("index", n.label() + ": |det basis| = " + out.index.get_str() + ", expected " + expected.get_str());
  return out;
}

ConstructedLattice corollary_zero(const NiemeierLattice& n) {
  const IntMatrix& g = n.gram();
  const Int modulus = 2 * n.coxeter() + 1;
  IntVector p = g * n.rho();
  IntMatrix basis = congruence_sublattice(p, modulus);
  RatVector bp = to_rational(basis * p);
  RatVector scaled = bp;
  for (auto& x : scaled) x /= modulus * modulus;
  IntMatrix gram = modified_gram(basis, g, bp, scaled, n.label());

  Codeword zero;
  for (std::size_t i = 0; i < n.component_count(); ++i) zero.classes.push_back(n.component(i).disc.zero());
  ConstructedLattice theorem = construct_leech(n, zero);
  if (basis != theorem.basis) fail("corollary-equivalence", n.label() + ": sublattices differ");
  if (gram != theorem.lattice.gram()) fail("corollary-equivalence", n.label() + ": forms differ");

  ConstructedLattice out = theorem;
  out.basis = basis;
  out.lattice = LatticeDesc(gram, definite_signature(gram));
  return out;
}

OracleAgreement check_against_oracle(const NiemeierLattice& n, const ConstructedLattice& c,
                                     const std::vector<HypVector>& section_classes) {
  OracleAgreement out;
  const LatticeDesc l = build_LN(n);
  const HypVector s = section_vector(n, c.gamma);
  const Orthocomplement oc = orthocomplement_gram(l, weyl_vector_LN(n), s);
  out.same_module = row_module_basis(oc.projection) == c.basis;
  if (out.same_module) {
    RatMatrix t = to_rational(oc.projection) * inverse(to_rational(c.basis));
    out.same_gram = is_integral(t) && oc.lattice.gram() == to_integer(t) * c.lattice.gram() * to_integer(t).transpose();
  }
  const RatVector v = to_rational(c.v_gamma);
  out.section_found = std::any_of(section_classes.begin(), section_classes.end(), [&](const HypVector& r) { return r.v == v; });
  return out;
}

codec::Json LeechVerdict::to_json() const {
  codec::Json j;
  j["rank"] = rank;
  j["negative_definite"] = negative_definite;
  j["even"] = even;
  j["unimodular"] = unimodular;
  j["root_count"] = root_count;
  j["rootless"] = rootless;
  j["min_norm"] = !negative_definite ? "n/a"
                  : !rootless       ? "2"
                  : norm4_count     ? (*norm4_count > 0 ? "4" : ">4")
                                    : ">=4";
  if (norm4_count) j["norm4_count"] = *norm4_count;
  j["passed"] = passed();
  return j;
}

LeechVerdict certify_leech(const LatticeDesc& l, const CertifyOptions& opts) {
  LeechVerdict v;
  v.rank = l.rank();
  try {
    v.negative_definite = definite_signature(l.gram()) == Signature::NegativeDefinite;
  } catch (const std::invalid_argument&) {
    v.negative_definite = false;
  }
  v.even = l.is_even();
  v.unimodular = l.is_unimodular();
  if (!v.negative_definite) return v;
  LatticeDesc definite(l.gram(), Signature::NegativeDefinite);
  if (opts.deep) {
    auto counts = norm_counts(definite, Int(4), opts.enumeration);
    v.root_count = counts.count(Int(2)) ? counts.at(Int(2)) : 0;
    v.norm4_count = counts.count(Int(4)) ? counts.at(Int(4)) : 0;
  } else {
    v.root_count = short_vectors(definite, Int(2), opts.enumeration).size();
  }
  v.rootless = v.root_count == 0;
  return v;
}

LatticeDesc negate(const LatticeDesc& l) {
  IntMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
  Signature s = l.signature() == Signature::PositiveDefinite   ? Signature::NegativeDefinite
                : l.signature() == Signature::NegativeDefinite ? Signature::PositiveDefinite
                                                               : Signature::Hyperbolic;
  return LatticeDesc(g, s);
}

codec::Json export_lattice(const LatticeDesc& l, const std::string& kind) {
  codec::Json doc;
  doc["format"] = "lattice";
  doc["version"] = 1;
  doc["kind"] = kind;
  doc["signature"] = to_string(l.signature());
  doc["rank"] = l.rank();
  doc["gram"] = codec::encode(l.gram());
  return doc;
}

codec::Json export_constructed(const ConstructedLattice& c, bool positive) {
  codec::Json doc = export_lattice(positive ? negate(c.lattice) : c.lattice, "leech");
  codec::Json prov;
  prov["niemeier"] = c.label;
  prov["codeword_index"] = c.codeword_index;
  codec::Json gamma = codec::Json::array();
  for (const auto& cls : c.gamma.classes) gamma.push_back(codec::encode(cls));
  prov["gamma"] = gamma;
  prov["h"] = codec::encode(c.h);
  prov["n_gamma"] = codec::encode(c.n_gamma);
  prov["a_gamma"] = codec::encode(c.a_gamma);
  prov["index"] = codec::encode(c.index);
  prov["v_gamma"] = codec::encode(c.v_gamma);
  prov["rho"] = codec::encode(c.rho);
  prov["basis"] = codec::encode(c.basis);
  doc["provenance"] = prov;
  return doc;
}

std::string export_lattice_gap(const LatticeDesc& l, const std::string& name) {
  std::ostringstream out;
  out << "rec(\n  name := \"" << name << "\",\n  signature := \"" << to_string(l.signature()) << "\",\n  gram := [\n";
  for (std::size_t i = 0; i < l.rank(); ++i) out << "    " << gap_row(l.gram().row(i)) << (i + 1 < l.rank() ? ",\n" : "\n");
  out << "  ]\n);\n";
  return out.str();
}

LatticeDesc import_lattice(const codec::Json& doc) {
  try {
    if (!doc.is_object() || doc.value("format", "") != "lattice") throw std::invalid_argument("not a lattice document");
    if (!doc.contains("version") || doc["version"] != 1) throw std::invalid_argument("unsupported lattice format version");
    IntMatrix g = codec::decode_int_matrix(doc.at("gram"));
    Signature s = parse_signature(doc.at("signature").get<std::string>());
    return LatticeDesc(g, s);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed lattice document: ") + e.what());
  }
}

DeepHoleInput deep_hole_from_construction(const NiemeierLattice& n, const ConstructedLattice& c) {
  RatVector a0 = linear_form_on(c.basis, c.alpha0);
  RatVector center = solve(to_rational(c.lattice.gram()), a0);
  for (auto& x : center) x /= c.h;
  return {c.lattice.gram(), center, n.types(), c.h};
}

}  // namespace leech
