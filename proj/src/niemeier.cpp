#include "leech/niemeier.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "leech/normal_form.hpp"

#ifndef LEECH_DEFAULT_GLUE_FILE
#define LEECH_DEFAULT_GLUE_FILE "data/niemeier_glue.json"
#endif

namespace leech {

namespace {

[[noreturn]] void fail(const std::string& check, const std::string& detail) {
  throw InvariantError("niemeier", check, detail);
}

}  // namespace

std::vector<ADEType> parse_label(const std::string& label) {
  static const std::regex token(R"(([ADE])(\d+)(?:\^(\d+))?)");
  std::vector<ADEType> out;
  auto begin = std::sregex_iterator(label.begin(), label.end(), token);
  std::size_t consumed = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != consumed) break;
    consumed += static_cast<std::size_t>(m.length());
    ADEType t = parse_ade(m[1].str() + m[2].str());
    int count = m[3].matched ? std::stoi(m[3].str()) : 1;
    if (count < 1 || count > 24) throw std::invalid_argument("bad exponent in label '" + label + "'");
    for (int k = 0; k < count; ++k) out.push_back(t);
  }
  if (out.empty() || consumed != label.size()) throw std::invalid_argument("malformed label '" + label + "'");
  std::sort(out.begin(), out.end(), canonical_before);
  return out;
}

std::string format_label(const std::vector<ADEType>& components) {
  std::map<ADEType, int> counts;
  for (const auto& t : components) ++counts[t];
  std::string out;
  for (Family f : {Family::A, Family::D, Family::E}) {
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
      if (it->first.family != f) continue;
      out += to_string(it->first);
      if (it->second > 1) out += "^" + std::to_string(it->second);
    }
  }
  return out;
}

std::vector<GlueData> parse_glue_document(const codec::Json& doc) {
  if (!doc.is_object() || doc.value("format", "") != "niemeier-glue")
    throw std::invalid_argument("not a niemeier-glue document");
  if (!doc.contains("version") || !doc["version"].is_number_integer() || doc["version"].get<int>() != kGlueFormatVersion)
    throw std::invalid_argument("unsupported glue file version");
  std::vector<GlueData> out;
  std::set<std::vector<ADEType>> seen;
  for (const auto& entry : doc.at("lattices")) {
    GlueData g;
    g.label = entry.at("label").get<std::string>();
    std::size_t dim = 0;
    for (const auto& c : entry.at("components")) {
      g.components.push_back(parse_ade(c.get<std::string>()));
      dim += static_cast<std::size_t>(g.components.back().rank);
    }
    if (!std::is_sorted(g.components.begin(), g.components.end(), canonical_before))
      throw std::invalid_argument(g.label + ": components are not in canonical order");
    if (parse_label(g.label) != g.components)
      throw std::invalid_argument(g.label + ": label does not match the component list");
    if (!seen.insert(g.components).second) throw std::invalid_argument("duplicate lattice type " + g.label);
    for (const auto& v : entry.at("glue")) {
      g.glue.push_back(codec::decode_rat_vector(v));
      if (g.glue.back().size() != dim) throw std::invalid_argument(g.label + ": glue vector has the wrong length");
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GlueData> load_glue_file(const std::string& path) {
  try {
    return parse_glue_document(codec::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed glue file '" + path + "': " + e.what());
  }
}

std::string default_glue_path() {
  if (const char* env = std::getenv("LEECH_GLUE_FILE")) return env;
  return LEECH_DEFAULT_GLUE_FILE;
}

const GlueData& find_glue(const std::vector<GlueData>& all, const std::string& label) {
  std::vector<ADEType> wanted;
  try {
    wanted = parse_label(label);
  } catch (const std::invalid_argument&) {
  }
  std::string valid;
  for (const auto& g : all) {
    if (!wanted.empty() && g.components == wanted) return g;
    valid += (valid.empty() ? "" : " ") + g.label;
  }
  throw std::invalid_argument("unknown Niemeier label '" + label + "'; valid labels: " + valid);
}

IntVector NiemeierLattice::simple_root(std::size_t k) const {
  return to_integer(basis_inverse_.row_vector(k), "simple-root-integral");
}

IntVector NiemeierLattice::highest_root(std::size_t i) const {
  RatVector theta(basis_.cols(), Rat(0));
  const auto& mu = components_[i]->highest_root;
  for (std::size_t k = 0; k < mu.size(); ++k) theta[offsets_[i] + k] = Rat(mu[k]);
  return to_n_integral(theta, "highest-root-integral");
}

RatVector NiemeierLattice::to_theta(const RatVector& n_coords) const { return n_coords * basis_; }

RatVector NiemeierLattice::to_n(const RatVector& theta) const { return theta * basis_inverse_; }

IntVector NiemeierLattice::to_n_integral(const RatVector& theta, const std::string& check) const {
  RatVector v = to_n(theta);
  if (!is_integral(v)) fail(check, label_ + ": vector is not in N");
  return to_integer(v);
}

Codeword NiemeierLattice::class_of(const RatVector& theta) const {
  Codeword c;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto n = components_[i]->rank();
    RatVector slice(theta.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                    theta.begin() + static_cast<std::ptrdiff_t>(offsets_[i] + n));
    c.classes.push_back(components_[i]->disc.class_of(slice));
  }
  return c;
}

Codeword NiemeierLattice::add(const Codeword& a, const Codeword& b) const {
  Codeword c;
  for (std::size_t i = 0; i < components_.size(); ++i)
    c.classes.push_back(components_[i]->disc.add(a.classes[i], b.classes[i]));
  return c;
}

NiemeierLattice assemble_niemeier(const GlueData& glue, const EnumOptions& opts) {
  std::vector<const RootComponent*> comps;
  std::vector<std::size_t> offsets;
  std::vector<IntMatrix> blocks;
  std::size_t dim = 0;
  for (const auto& t : glue.components) {
    comps.push_back(&root_component(t));
    offsets.push_back(dim);
    blocks.push_back(comps.back()->lattice.gram());
    dim += comps.back()->rank();
  }
  if (dim != 24) fail("rank", glue.label + ": total rank " + std::to_string(dim));
  const Int h = comps.front()->coxeter;
  for (const auto* c : comps)
    if (c->coxeter != h) fail("coxeter-equal", glue.label + ": component Coxeter numbers differ");

  IntMatrix root_gram = block_diagonal(blocks);
  const RatMatrix root_gram_q = to_rational(root_gram);
  for (const auto& g : glue.glue)
    if (g.size() != dim || !is_integral(root_gram_q * g)) fail("glue-in-dual", glue.label + ": glue vector is not in <R>^dual");

  RatMatrix gens(dim + glue.glue.size(), dim);
  for (std::size_t i = 0; i < dim; ++i) gens(i, i) = 1;
  for (std::size_t k = 0; k < glue.glue.size(); ++k)
    for (std::size_t j = 0; j < dim; ++j) gens(dim + k, j) = glue.glue[k][j];
  RatMatrix basis = rational_row_module_basis(gens);
  if (basis.rows() != dim) fail("rank", glue.label + ": glue module has the wrong rank");

  RatMatrix gram_q = basis * root_gram_q * basis.transpose();
  if (!is_integral(gram_q)) fail("integral-form", glue.label + ": overlattice form is not integral");
  IntMatrix gram = to_integer(gram_q);
  NiemeierLattice n(LatticeDesc(gram, Signature::NegativeDefinite, basis, root_gram_q));
  n.label_ = glue.label;
  n.types_ = glue.components;
  n.components_ = comps;
  n.offsets_ = offsets;
  n.basis_ = basis;
  n.basis_inverse_ = inverse(basis);
  n.root_gram_ = root_gram;
  n.coxeter_ = h;

  if (definite_signature(gram) != Signature::NegativeDefinite) fail("negative-definite", glue.label);
  if (!n.lattice_.is_even()) fail("even", glue.label);
  if (abs(n.lattice_.determinant()) != 1) fail("unimodular", glue.label + ": det " + n.lattice_.determinant().get_str());

  std::vector<Point> roots = short_vectors(n.lattice_, Int(2), opts);
  n.root_count_ = roots.size();
  if (Int(static_cast<unsigned long>(roots.size())) != 24 * h)
    fail("root-count", glue.label + ": " + std::to_string(roots.size()) + " roots, expected 24h = " + Int(24 * h).get_str());
  std::vector<IntVector> root_vectors;
  for (const auto& r : roots) {
    if (!is_integral(n.to_theta(to_rat_vector(r)))) fail("roots-in-root-lattice", glue.label);
    root_vectors.push_back(to_int_vector(r));
  }
  SimpleSystem theta = extract_simple_system(root_vectors, gram);
  if (identify_ade_decomposition(theta, gram) != glue.components) fail("root-type", glue.label);

  n.codewords_ = enumerate_codewords(n);
  Int code_order = static_cast<unsigned long>(n.codewords_.size());
  if (code_order * code_order != abs(determinant(root_gram)))
    fail("code-order", glue.label + ": |code|^2 != det <R>");

  RatVector rho_theta;
  for (const auto* c : comps) rho_theta.insert(rho_theta.end(), c->weyl.begin(), c->weyl.end());
  n.rho_ = n.to_n_integral(rho_theta, "weyl-integral");
  if (n.lattice_.pair(n.rho_, n.rho_) != -2 * h * (h + 1)) fail("weyl-norm", glue.label);
  return n;
}

std::vector<Codeword> enumerate_codewords(const NiemeierLattice& n) {
  if (!n.codewords().empty()) return n.codewords();
  Codeword zero;
  for (std::size_t i = 0; i < n.component_count(); ++i) zero.classes.push_back(n.component(i).disc.zero());
  std::vector<Codeword> gens;
  const RatMatrix& b = n.basis();
  for (std::size_t k = 0; k < b.rows(); ++k) {
    Codeword c = n.class_of(b.row_vector(k));
    if (c != zero) gens.push_back(std::move(c));
  }
  std::set<Codeword> group{zero};
  std::vector<Codeword> frontier{zero};
  while (!frontier.empty()) {
    std::vector<Codeword> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Codeword y = n.add(x, g);
        if (group.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

IntVector canonical_representative(const NiemeierLattice& n, const Codeword& gamma) {
  if (gamma.classes.size() != n.component_count()) throw std::invalid_argument("codeword has the wrong number of components");
  RatVector theta(n.basis().cols(), Rat(0));
  for (std::size_t i = 0; i < n.component_count(); ++i) {
    RatVector rep = canonical_rep_component(n.component(i), gamma.classes[i]);
    std::copy(rep.begin(), rep.end(), theta.begin() + static_cast<std::ptrdiff_t>(n.offset(i)));
  }
  IntVector v = n.to_n_integral(theta, "canonical-rep-integral");
  if (n.class_of(theta) != gamma) fail("canonical-rep-class", n.label());
  return v;
}

WeylData weyl_data(const NiemeierLattice& n) {
  for (std::size_t i = 0; i < n.component_count(); ++i)
    if (n.component(i).coxeter != n.coxeter()) fail("coxeter-equal", n.label());
  if (n.lattice().pair(n.rho(), n.rho()) != -2 * n.coxeter() * (n.coxeter() + 1)) fail("weyl-norm", n.label());
  return {n.coxeter(), n.rho()};
}

codec::Json export_niemeier(const NiemeierLattice& n) {
  codec::Json doc;
  doc["format"] = "lattice";
  doc["version"] = 1;
  doc["kind"] = "niemeier";
  doc["label"] = n.label();
  codec::Json comps = codec::Json::array();
  for (const auto& t : n.types()) comps.push_back(to_string(t));
  doc["components"] = comps;
  doc["signature"] = to_string(n.lattice().signature());
  doc["coxeter"] = codec::encode(n.coxeter());
  doc["code_order"] = n.codewords().size();
  doc["gram"] = codec::encode(n.gram());
  doc["basis"] = codec::encode(n.basis());
  doc["rho"] = codec::encode(n.rho());
  return doc;
}

namespace {

std::string gap_vector(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

}  // namespace

std::string export_niemeier_gap(const NiemeierLattice& n) {
  std::ostringstream out;
  out << "rec(\n  label := \"" << n.label() << "\",\n  coxeter := " << n.coxeter() << ",\n  gram := [\n";
  for (std::size_t i = 0; i < n.gram().rows(); ++i)
    out << "    " << gap_vector(n.gram().row_vector(i)) << (i + 1 < n.gram().rows() ? ",\n" : "\n");
  out << "  ],\n  rho := " << gap_vector(n.rho()) << "\n);\n";
  return out.str();
}

}  // namespace leech
