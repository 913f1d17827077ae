#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "leech/leech_build.hpp"
#include "leech/normal_form.hpp"
#include "oracles.hpp"

using namespace leech;

namespace {

const NiemeierLattice& lattice(const std::string& label) {
  static const std::vector<GlueData> all = load_glue_file(default_glue_path());
  static std::map<std::string, NiemeierLattice> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, assemble_niemeier(find_glue(all, label))).first;
  return it->second;
}

Codeword zero_word(const NiemeierLattice& n) { return n.codewords().front(); }

Rat pair26(const LatticeDesc& l, const HypVector& x, const HypVector& y) {
  return bilinear(x.coordinates(), to_rational(l.gram()), y.coordinates());
}

}  // namespace

TEST_CASE("L_N = U + N") {
  const auto& n = lattice("E8^3");
  LatticeDesc l = build_LN(n);
  CHECK(l.rank() == 26);
  CHECK(l.signature() == Signature::Hyperbolic);
  CHECK(l.is_even());
  CHECK(determinant(l.gram()) == -1);
  CHECK(hyp_pair(n.gram(), f_vector(24), z_vector(24)) == 1);
  CHECK(hyp_pair(n.gram(), z_vector(24), z_vector(24)) == -2);
  CHECK(pair26(l, f_vector(24), z_vector(24)) == 1);
}

TEST_CASE("Weyl vectors of L_N") {
  const auto& a1 = lattice("A1^24");
  HypVector w = weyl_vector_LN(a1);
  CHECK(w == make_hyp(3, 2, a1.rho()));
  CHECK(hyp_pair(a1.gram(), w, w) == 0);

  const auto& e8 = lattice("E8^3");
  CHECK(weyl_vector_LN(e8) == make_hyp(31, 30, e8.rho()));

  const auto& d24 = lattice("D24");
  HypVector wd = weyl_vector_LN(d24);
  IntVector mu = d24.highest_root(0);
  for (auto& x : mu) x = -x;
  CHECK(hyp_pair(d24.gram(), wd, make_hyp(1, 0, mu)) == 1);
  // Independently in the full 26 x 26 Gram.
  LatticeDesc l = build_LN(d24);
  CHECK(pair26(l, wd, make_hyp(1, 0, mu)) == 1);
  CHECK(pair26(l, wd, wd) == 0);
}

TEST_CASE("section vectors") {
  const auto& e8 = lattice("E8^3");
  CHECK(section_vector(e8, zero_word(e8)) == z_vector(24));

  const auto& d24 = lattice("D24");
  Codeword g = d24.codewords()[1];
  HypVector s = section_vector(d24, g);
  IntVector v = canonical_representative(d24, g);
  CHECK(d24.lattice().pair(v, v) == -6);
  CHECK(s == make_hyp(2, 1, v));
  LatticeDesc l = build_LN(d24);
  CHECK(pair26(l, s, weyl_vector_LN(d24)) == 1);
  CHECK(pair26(l, s, s) == -2);
}

TEST_CASE("section classes reproduce the canonical representatives") {
  for (const std::string label : {"E8^3", "D24", "A24", "D16E8", "A3^8", "E6^4"}) {
    CAPTURE(label);
    const auto& n = lattice(label);
    auto classes = enumerate_section_classes(n);
    CHECK(classes.size() == n.codewords().size());
    std::set<RatVector> from_oracle, from_reps;
    for (const auto& r : classes) from_oracle.insert(r.v);
    for (const auto& c : n.codewords()) from_reps.insert(to_rational(canonical_representative(n, c)));
    CHECK(from_oracle == from_reps);
  }
  auto e8 = enumerate_section_classes(lattice("E8^3"));
  REQUIRE(e8.size() == 1);
  CHECK(e8[0] == z_vector(24));
}

TEST_CASE("orthogonal complement of U(w, s)") {
  for (const std::string label : {"D24", "A24", "A2^12"}) {
    CAPTURE(label);
    const auto& n = lattice(label);
    LatticeDesc l = build_LN(n);
    HypVector w = weyl_vector_LN(n);
    for (std::size_t k = 0; k < std::min<std::size_t>(3, n.codewords().size()); ++k) {
      const Codeword& g = n.codewords()[k];
      Orthocomplement oc = orthocomplement_gram(l, w, section_vector(n, g));
      CHECK(abs(oc.lattice.determinant()) == 1);
      CHECK(oc.lattice.is_even());
      CHECK(oc.lattice.signature() == Signature::NegativeDefinite);
      // Every basis vector is orthogonal to w and s in the full Gram.
      for (std::size_t i = 0; i < oc.basis.rows(); ++i) {
        IntVector x = oc.basis.row_vector(i);
        HypVector hx = make_hyp(x[0], x[1], IntVector(x.begin() + 2, x.end()));
        CHECK(pair26(l, hx, w) == 0);
        CHECK(pair26(l, hx, section_vector(n, g)) == 0);
      }
      ConstructedLattice c = construct_leech(n, g);
      CHECK(row_module_basis(oc.projection) == c.basis);
      RatMatrix t = to_rational(oc.projection) * inverse(to_rational(c.basis));
      REQUIRE(is_integral(t));
      IntMatrix ti = to_integer(t);
      CHECK(oc.lattice.gram() == ti * c.lattice.gram() * ti.transpose());
    }
  }
  const auto& n = lattice("D24");
  CHECK_THROWS_AS(orthocomplement_gram(build_LN(n), weyl_vector_LN(n), weyl_vector_LN(n)), std::invalid_argument);
}

TEST_CASE("deep-hole checks on holes built from several Niemeier lattices") {
  for (const std::string label : {"E8^3", "D24", "A24"}) {
    CAPTURE(label);
    const auto& n = lattice(label);
    ConstructedLattice c = construct_leech(n, zero_word(n));
    DeepHoleInput d = deep_hole_from_construction(n, c);
    DeepHoleReport r = deep_hole_checks(d);
    CHECK(r.passed());
    CHECK(r.distance_sq == Rat(2));
    CHECK(r.type == n.types());
    CHECK(r.coxeter == n.coxeter());
    std::size_t nodes = 0;
    for (const auto& t : n.types()) nodes += static_cast<std::size_t>(t.rank) + 1;
    CHECK(r.xi0.size() == nodes);
    CHECK(r.xi1_count == n.codewords().size());
  }
}

TEST_CASE("deep-hole input file of type A1^24") {
  DeepHoleInput d = load_deep_hole(std::string(LEECH_DATA_DIR) + "/deepholes/A1_24.json");
  DeepHoleReport r = deep_hole_checks(d);
  CHECK(r.input_valid);
  CHECK(r.distance_sq == Rat(2));
  CHECK(r.primitive);
  CHECK(r.xi0.size() == 48);
  CHECK(r.xi1_count == 4096);
  CHECK(r.msum);
  CHECK(r.thetais);
  CHECK(r.passed());
  CHECK(r.components.size() == 24);
  for (const auto& c : r.components) {
    CHECK(c.type == make_ade(Family::A, 1));
    CHECK(c.m == IntVector{1, 1});
  }
  // msum by hand: m(r) r summed over each pair equals f(c).
  HypVector f = f_of_center(d.gram, d.center, Int(2));
  for (const auto& c : r.components) {
    HypVector a = leech_root(d.gram, r.xi0[c.nodes[0]]), b = leech_root(d.gram, r.xi0[c.nodes[1]]);
    CHECK(a.a + b.a == f.a);
    CHECK(a.b + b.b == f.b);
    for (std::size_t i = 0; i < 24; ++i) CHECK(a.v[i] + b.v[i] == f.v[i]);
  }

  DeepHoleInput zero = d;
  for (auto& x : zero.center) x = 0;
  DeepHoleReport rz = deep_hole_checks(zero);
  CHECK(rz.input_valid);
  CHECK(!rz.deep_hole);
  CHECK(rz.distance_sq == Rat(0));
  CHECK(!rz.passed());

  DeepHoleInput moved = d;
  moved.center[0] += Rat(1, 1000);
  DeepHoleReport rm = deep_hole_checks(moved);
  CHECK(!rm.deep_hole);
  REQUIRE(rm.distance_sq);
  CHECK(*rm.distance_sq < 2);

  DeepHoleInput wrong = d;
  wrong.declared_type = parse_label("D24");
  CHECK(!deep_hole_checks(wrong).passed());
}

TEST_CASE("deep-hole input validation") {
  const auto& n = lattice("D24");
  DeepHoleInput rooted{n.gram(), RatVector(24, Rat(0)), std::nullopt, std::nullopt};
  DeepHoleReport r = deep_hole_checks(rooted);
  CHECK(!r.input_valid);
  CHECK(!r.passed());

  codec::Json doc;
  doc["format"] = "deep-hole";
  doc["version"] = 2;
  CHECK_THROWS_AS(parse_deep_hole(doc), std::invalid_argument);
  doc["version"] = 1;
  CHECK_THROWS_AS(parse_deep_hole(doc), std::invalid_argument);
  doc["gram"] = codec::encode(IntMatrix{{-2}});
  doc["center"] = codec::encode(RatVector{Rat(1), Rat(2)});
  CHECK_THROWS_AS(parse_deep_hole(doc), std::invalid_argument);

  DeepHoleInput d = load_deep_hole(std::string(LEECH_DATA_DIR) + "/deepholes/A1_24.json");
  DeepHoleInput back = parse_deep_hole(encode_deep_hole(d));
  CHECK(back.gram == d.gram);
  CHECK(back.center == d.center);
  CHECK(back.declared_type == d.declared_type);
}
