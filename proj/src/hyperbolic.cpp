#include "leech/hyperbolic.hpp"

#include <algorithm>
#include <numeric>

#include "leech/leech_build.hpp"
#include "leech/normal_form.hpp"

namespace leech {

namespace {

[[noreturn]] void fail(const std::string& check, const std::string& detail) {
  throw InvariantError("hyperbolic", check, detail);
}

void expect_pair(const IntMatrix& g, const HypVector& x, const HypVector& y, long value, const std::string& check,
                 const std::string& what) {
  Rat p = hyp_pair(g, x, y);
  if (p != value) fail(check, what + " = " + to_string(p) + ", expected " + std::to_string(value));
}

// Gram with machine-size entries, for inner loops over many points.
class SmallGram {
 public:
  explicit SmallGram(const IntMatrix& g) : n_(g.rows()), e_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (!g(i, j).fits_slong_p() || abs(g(i, j)) > (1L << 20)) throw std::out_of_range("Gram entry too large");
        e_[i * n_ + j] = g(i, j).get_si();
      }
  }

  std::vector<__int128> apply(const Point& x) const {
    std::vector<__int128> out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += static_cast<__int128>(e_[i * n_ + j]) * x[j];
    return out;
  }

  static __int128 dot(const std::vector<__int128>& gx, const Point& y) {
    __int128 s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += gx[i] * y[i];
    return s;
  }

 private:
  std::size_t n_;
  std::vector<long> e_;
};

}  // namespace

RatVector HypVector::coordinates() const {
  RatVector out{a, b};
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool HypVector::is_integral() const { return leech::is_integral(a) && leech::is_integral(b) && leech::is_integral(v); }

HypVector make_hyp(const Int& a, const Int& b, const IntVector& v) { return {Rat(a), Rat(b), to_rational(v)}; }

Rat hyp_pair(const IntMatrix& gram, const HypVector& x, const HypVector& y) {
  if (x.v.size() != gram.rows() || y.v.size() != gram.rows()) throw std::invalid_argument("hyp_pair: dimension mismatch");
  return x.a * y.b + x.b * y.a + bilinear(x.v, to_rational(gram), y.v);
}

std::string to_string(const HypVector& x) {
  std::string s = "(" + to_string(x.a) + ", " + to_string(x.b) + ", [";
  for (std::size_t i = 0; i < x.v.size(); ++i) s += (i ? " " : "") + to_string(x.v[i]);
  return s + "])";
}

LatticeDesc build_LN(const NiemeierLattice& n) {
  IntMatrix u{{0, 1}, {1, 0}};
  LatticeDesc l(block_diagonal({u, n.gram()}), Signature::Hyperbolic);
  if (l.rank() != 26) fail("rank", n.label());
  if (!l.is_even()) fail("even", n.label());
  if (abs(l.determinant()) != 1) fail("unimodular", n.label());
  return l;
}

HypVector f_vector(std::size_t dim) { return {Rat(1), Rat(0), RatVector(dim, Rat(0))}; }
HypVector z_vector(std::size_t dim) { return {Rat(-1), Rat(1), RatVector(dim, Rat(0))}; }

HypVector weyl_vector_LN(const NiemeierLattice& n) {
  const IntMatrix& g = n.gram();
  const Int h = n.coxeter();
  HypVector w = make_hyp(h + 1, h, n.rho());
  const std::size_t dim = g.rows();
  expect_pair(g, w, w, 0, "weyl-isotropic", n.label() + ": <w, w>");
  expect_pair(g, w, z_vector(dim), 1, "weyl-wall", n.label() + ": <w, z>");
  for (std::size_t k = 0; k < dim; ++k) {
    HypVector r = make_hyp(0, 0, n.simple_root(k));
    expect_pair(g, r, r, -2, "simple-root-norm", n.label());
    expect_pair(g, w, r, 1, "weyl-wall", n.label() + ": <w, r_" + std::to_string(k) + ">");
  }
  for (std::size_t i = 0; i < n.component_count(); ++i) {
    IntVector mu = n.highest_root(i);
    for (auto& x : mu) x = -x;
    HypVector theta = make_hyp(1, 0, mu);
    expect_pair(g, theta, theta, -2, "theta-norm", n.label());
    expect_pair(g, w, theta, 1, "weyl-wall", n.label() + ": <w, theta_" + std::to_string(i) + ">");
  }
  return w;
}

HypVector section_vector(const NiemeierLattice& n, const Codeword& gamma) {
  IntVector v = canonical_representative(n, gamma);
  Int norm = n.lattice().pair(v, v);
  if (norm % 2 != 0) fail("section-even", n.label() + ": odd n_gamma");
  HypVector s = make_hyp(-1 - norm / 2, 1, v);
  const IntMatrix& g = n.gram();
  expect_pair(g, s, s, -2, "section-norm", n.label());
  expect_pair(g, s, f_vector(g.rows()), 1, "section-fiber", n.label());
  expect_pair(g, s, weyl_vector_LN(n), 1, "section-weyl", n.label());
  return s;
}

std::vector<HypVector> enumerate_section_classes(const NiemeierLattice& n, const EnumOptions& opts) {
  // <f, r> = 1 forces b = 1, <r, r> = -2 forces a = -1 - <v, v>/2, and then
  // <w, r> = 1 is |q(v - rho/h)| = 2(h + 1)/h.
  const Int& h = n.coxeter();
  RatVector center = to_rational(n.rho());
  for (auto& x : center) x /= h;
  Rat target(2 * (h + 1), h);
  target.canonicalize();
  std::vector<HypVector> out;
  const HypVector w = weyl_vector_LN(n);
  const HypVector f = f_vector(n.gram().rows());
  for (const auto& p : affine_shell(n.lattice(), center, target, opts)) {
    IntVector v = to_int_vector(p);
    Int norm = n.lattice().pair(v, v);
    HypVector r = make_hyp(-1 - norm / 2, 1, v);
    if (hyp_pair(n.gram(), r, r) != -2 || hyp_pair(n.gram(), r, w) != 1 || hyp_pair(n.gram(), r, f) != 1)
      fail("section-slice", n.label());
    out.push_back(std::move(r));
  }
  if (out.size() != n.codewords().size())
    fail("section-count", n.label() + ": " + std::to_string(out.size()) + " section classes, |code| = " +
                              std::to_string(n.codewords().size()));
  return out;
}

Orthocomplement orthocomplement_gram(const LatticeDesc& l, const HypVector& w, const HypVector& s) {
  const IntMatrix& g = l.gram();
  const std::size_t dim = g.rows() - 2;
  IntMatrix ug = g.block(2, 2, dim, dim);
  if (hyp_pair(ug, w, s) != 1) throw std::invalid_argument("orthocomplement_gram: <w, s> must be 1");
  if (!w.is_integral() || !s.is_integral()) throw std::invalid_argument("orthocomplement_gram: w and s must be integral");
  IntVector gw = g * to_integer(w.coordinates());
  IntVector gs = g * to_integer(s.coordinates());
  IntMatrix m(g.rows(), 2);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    m(i, 0) = gw[i];
    m(i, 1) = gs[i];
  }
  IntMatrix basis = integer_kernel(m);
  if (basis.rows() != dim) fail("complement-rank", std::to_string(basis.rows()));
  IntMatrix gram = basis * g * basis.transpose();
  LatticeDesc lat(gram, definite_signature(gram));
  if (!lat.is_even()) fail("complement-even", "");
  if (abs(lat.determinant()) != 1) fail("complement-unimodular", lat.determinant().get_str());
  return {std::move(lat), basis, basis.block(0, 2, dim, dim)};
}

DeepHoleInput parse_deep_hole(const codec::Json& doc) {
  try {
    if (!doc.is_object() || doc.value("format", "") != "deep-hole") throw std::invalid_argument("not a deep-hole document");
    if (!doc.contains("version") || doc["version"] != kDeepHoleFormatVersion)
      throw std::invalid_argument("unsupported deep-hole format version");
    DeepHoleInput d;
    d.gram = codec::decode_int_matrix(doc.at("gram"));
    d.center = codec::decode_rat_vector(doc.at("center"));
    if (d.gram.rows() != d.gram.cols() || d.center.size() != d.gram.rows())
      throw std::invalid_argument("gram and center dimensions disagree");
    if (doc.contains("type")) d.declared_type = parse_label(doc["type"].get<std::string>());
    if (doc.contains("coxeter")) d.declared_coxeter = codec::decode_int(doc["coxeter"]);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed deep-hole document: ") + e.what());
  }
}

DeepHoleInput load_deep_hole(const std::string& path) { return parse_deep_hole(codec::read_file(path)); }

codec::Json encode_deep_hole(const DeepHoleInput& d) {
  codec::Json doc;
  doc["format"] = "deep-hole";
  doc["version"] = kDeepHoleFormatVersion;
  if (d.declared_type) doc["type"] = format_label(*d.declared_type);
  if (d.declared_coxeter) doc["coxeter"] = codec::encode(*d.declared_coxeter);
  doc["center"] = codec::encode(d.center);
  doc["gram"] = codec::encode(d.gram);
  return doc;
}

std::vector<Point> p_nu(const LatticeDesc& leech, const RatVector& c, const Int& h, unsigned nu,
                        const EnumOptions& opts) {
  Rat target = Rat(2) * (Rat(1) + Rat(Int(nu)) / Rat(h));
  return affine_shell(leech, c, target, opts);
}

HypVector leech_root(const IntMatrix& gram, const Point& lambda) {
  IntVector l = to_int_vector(lambda);
  Int q = bilinear(l, gram, l);
  return make_hyp(-1 - q / 2, 1, l);
}

HypVector f_of_center(const IntMatrix& gram, const RatVector& c, const Int& h) {
  Rat q = bilinear(c, to_rational(gram), c);
  RatVector v = c;
  for (auto& x : v) x *= h;
  return {-q / 2 * h, Rat(h), v};
}

bool DeepHoleReport::passed() const {
  return input_valid && deep_hole && affine_components && primitive && msum && thetais &&
         declared_type_matches.value_or(true) && declared_coxeter_matches.value_or(true);
}

codec::Json DeepHoleReport::to_json() const {
  codec::Json j;
  j["input_valid"] = input_valid;
  if (!input_error.empty()) j["input_error"] = input_error;
  j["distance_sq"] = distance_sq ? to_string(*distance_sq) : std::string(">2");
  j["deep_hole"] = deep_hole;
  if (deep_hole) {
    j["type"] = format_label(type);
    j["coxeter"] = codec::encode(coxeter);
    if (declared_type_matches) j["declared_type_matches"] = *declared_type_matches;
    if (declared_coxeter_matches) j["declared_coxeter_matches"] = *declared_coxeter_matches;
    j["affine_components"] = affine_components;
    j["primitive"] = primitive;
    j["xi0_count"] = xi0.size();
    j["xi1_count"] = xi1_count;
    j["msum"] = msum;
    j["thetais"] = thetais;
  }
  j["passed"] = passed();
  return j;
}

namespace {

// Splits the Xi_0 pairing graph into connected components and certifies each
// as an extended ADE diagram: a positive kernel vector m of the pairing makes
// the component affine, and removing a node with m = 1 leaves the ordinary type.
std::vector<XiComponent> affine_components(const IntMatrix& pairing, bool& ok) {
  const std::size_t n = pairing.rows();
  std::vector<int> comp(n, -1);
  std::vector<XiComponent> out;
  ok = true;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    XiComponent xc;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      xc.nodes.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && pairing(i, j) != 0) {
          comp[j] = static_cast<int>(out.size());
          stack.push_back(j);
        }
    }
    std::sort(xc.nodes.begin(), xc.nodes.end());
    const std::size_t k = xc.nodes.size();
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = pairing(xc.nodes[i], xc.nodes[j]);
    IntMatrix ker = integer_kernel(sub);
    bool good = ker.rows() == 1 && k >= 2;
    if (good) {
      xc.m = ker.row_vector(0);
      if (xc.m[0] < 0)
        for (auto& x : xc.m) x = -x;
      good = std::all_of(xc.m.begin(), xc.m.end(), [](const Int& x) { return x > 0; });
    }
    if (good) {
      auto drop = std::find(xc.m.begin(), xc.m.end(), Int(1));
      good = drop != xc.m.end();
      if (good) {
        std::size_t d = static_cast<std::size_t>(drop - xc.m.begin());
        IntMatrix ordinary(k - 1, k - 1);
        for (std::size_t i = 0, ii = 0; i < k; ++i) {
          if (i == d) continue;
          for (std::size_t j = 0, jj = 0; j < k; ++j) {
            if (j == d) continue;
            ordinary(ii, jj++) = sub(i, j);
          }
          ++ii;
        }
        try {
          xc.type = identify_component(ordinary).type;
          IntVector expected = highest_root_and_m(xc.type).m;
          IntVector got = xc.m;
          std::sort(expected.begin(), expected.end());
          std::sort(got.begin(), got.end());
          good = expected == got;
        } catch (const InvariantError&) {
          good = false;
        }
      }
    }
    ok = ok && good;
    out.push_back(std::move(xc));
  }
  return out;
}

}  // namespace

DeepHoleReport deep_hole_checks(const DeepHoleInput& d, const EnumOptions& opts) {
  DeepHoleReport rep;
  std::optional<LatticeDesc> leech;
  try {
    leech.emplace(d.gram, Signature::NegativeDefinite);
    LeechVerdict v = certify_leech(*leech, {false, opts});
    if (!v.passed()) rep.input_error = "gram is not a negative-definite Leech lattice";
    if (d.center.size() != d.gram.rows()) rep.input_error = "center has the wrong dimension";
  } catch (const std::exception& e) {
    rep.input_error = e.what();
  }
  rep.input_valid = rep.input_error.empty();
  if (!rep.input_valid) return rep;

  const IntMatrix& g = d.gram;
  auto near = points_near(*leech, d.center, Rat(2), opts);
  for (const auto& p : near)
    if (!rep.distance_sq || p.norm < *rep.distance_sq) rep.distance_sq = p.norm;
  rep.deep_hole = rep.distance_sq && *rep.distance_sq == 2;
  if (!rep.deep_hole) return rep;
  for (const auto& p : near)
    if (p.norm == 2) rep.xi0.push_back(p.x);

  // Pairings of the Leech roots r_lambda: <r_l, r_m> = -2 - q(l - m)/2.
  const std::size_t k0 = rep.xi0.size();
  IntMatrix pairing(k0, k0);
  std::vector<IntVector> xi0_int;
  for (const auto& p : rep.xi0) xi0_int.push_back(to_int_vector(p));
  for (std::size_t i = 0; i < k0; ++i)
    for (std::size_t j = 0; j < k0; ++j) pairing(i, j) = to_integer(hyp_pair(g, leech_root(g, rep.xi0[i]), leech_root(g, rep.xi0[j])));
  rep.components = affine_components(pairing, rep.affine_components);
  if (!rep.affine_components) return rep;
  for (const auto& c : rep.components) rep.type.push_back(c.type);
  std::sort(rep.type.begin(), rep.type.end(), canonical_before);

  // h is the common value of sum(m) over the components.
  std::vector<Int> sums;
  for (const auto& c : rep.components) sums.push_back(std::accumulate(c.m.begin(), c.m.end(), Int(0)));
  if (std::adjacent_find(sums.begin(), sums.end(), std::not_equal_to<>()) != sums.end()) {
    rep.affine_components = false;
    return rep;
  }
  rep.coxeter = sums.front();
  if (d.declared_type) rep.declared_type_matches = *d.declared_type == rep.type;
  if (d.declared_coxeter) rep.declared_coxeter_matches = *d.declared_coxeter == rep.coxeter;

  RatVector hc = d.center;
  for (auto& x : hc) x *= rep.coxeter;
  Rat half_norm = bilinear(d.center, to_rational(g), d.center) * rep.coxeter / 2;
  rep.primitive = is_integral(hc) && is_integral(half_norm);
  if (rep.primitive) {
    IntVector hci = to_integer(hc);
    rep.primitive = gcd_of(hci) == 1;
  }

  const HypVector f = f_of_center(g, d.center, rep.coxeter);
  rep.msum = true;
  for (const auto& c : rep.components) {
    HypVector sum{Rat(0), Rat(0), RatVector(g.rows(), Rat(0))};
    for (std::size_t t = 0; t < c.nodes.size(); ++t) {
      HypVector r = leech_root(g, rep.xi0[c.nodes[t]]);
      Rat m(c.m[t]);
      sum.a += m * r.a;
      sum.b += m * r.b;
      for (std::size_t i = 0; i < g.rows(); ++i) sum.v[i] += m * r.v[i];
    }
    rep.msum = rep.msum && sum == f;
  }

  auto xi1 = p_nu(*leech, d.center, rep.coxeter, 1, opts);
  rep.xi1_count = xi1.size();
  SmallGram sg(g);
  std::vector<std::vector<__int128>> g_xi0;
  std::vector<__int128> a0;
  for (const auto& p : rep.xi0) {
    g_xi0.push_back(sg.apply(p));
    a0.push_back(-1 - SmallGram::dot(g_xi0.back(), p) / 2);
  }
  rep.thetais = !xi1.empty();
  for (const auto& s : xi1) {
    __int128 as = -1 - SmallGram::dot(sg.apply(s), s) / 2;
    for (const auto& c : rep.components) {
      int ones = 0;
      bool ok = true;
      for (std::size_t t = 0; t < c.nodes.size(); ++t) {
        std::size_t i = c.nodes[t];
        __int128 p = a0[i] + as + SmallGram::dot(g_xi0[i], s);
        if (p == 1) {
          ++ones;
          ok = ok && c.m[t] == 1;
        } else if (p != 0) {
          ok = false;
        }
      }
      if (ones != 1 || !ok) rep.thetais = false;
    }
  }
  return rep;
}

}  // namespace leech
