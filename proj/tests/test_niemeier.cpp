#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "leech/niemeier.hpp"
#include "oracles.hpp"

using namespace leech;

namespace {

const std::vector<GlueData>& glue() {
  static const std::vector<GlueData> all = load_glue_file(default_glue_path());
  return all;
}

const NiemeierLattice& lattice(const std::string& label) {
  static std::map<std::string, NiemeierLattice> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, assemble_niemeier(find_glue(glue(), label))).first;
  return it->second;
}

Codeword nonzero_codeword(const NiemeierLattice& n) {
  for (const auto& c : n.codewords())
    for (std::size_t i = 0; i < c.classes.size(); ++i)
      if (!n.component(i).disc.is_zero(c.classes[i])) return c;
  throw std::logic_error("trivial code");
}

codec::Json single_lattice_doc(const std::string& label, const std::vector<std::string>& comps,
                               const std::vector<std::vector<std::string>>& glue_vectors) {
  codec::Json doc;
  doc["format"] = "niemeier-glue";
  doc["version"] = 1;
  codec::Json entry;
  entry["label"] = label;
  entry["components"] = comps;
  entry["glue"] = glue_vectors;
  doc["lattices"].push_back(entry);
  return doc;
}

}  // namespace

TEST_CASE("labels") {
  auto t = parse_label("A7^2D5^2");
  CHECK(t.size() == 4);
  CHECK(t.front() == make_ade(Family::D, 5));
  CHECK(format_label(t) == "A7^2D5^2");
  CHECK(format_label(parse_label("E6A11D7")) == "A11D7E6");
  CHECK_THROWS_AS(parse_label("A1^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label("X3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label(""), std::invalid_argument);
  for (const auto& g : glue()) CHECK(format_label(g.components) == g.label);
}

TEST_CASE("the bundled glue file lists 23 distinct rank-24 types") {
  CHECK(glue().size() == 23);
  std::set<std::vector<ADEType>> types;
  for (const auto& g : glue()) {
    int rank = 0;
    for (const auto& t : g.components) rank += t.rank;
    CHECK(rank == 24);
    types.insert(g.components);
  }
  CHECK(types.size() == 23);
  CHECK_THROWS_AS(find_glue(glue(), "BADLABEL"), std::invalid_argument);
  CHECK(find_glue(glue(), "E6^4").label == "E6^4");
}

TEST_CASE("glue documents are validated") {
  codec::Json doc = single_lattice_doc("E8^3", {"E8", "E8", "E8"}, {});
  CHECK(parse_glue_document(doc).size() == 1);

  codec::Json v2 = doc;
  v2["version"] = 2;
  CHECK_THROWS_AS(parse_glue_document(v2), std::invalid_argument);

  codec::Json dup = doc;
  dup["lattices"].push_back(doc["lattices"][0]);
  CHECK_THROWS_AS(parse_glue_document(dup), std::invalid_argument);

  codec::Json wrong_label = single_lattice_doc("E8^2", {"E8", "E8", "E8"}, {});
  CHECK_THROWS_AS(parse_glue_document(wrong_label), std::invalid_argument);

  codec::Json order = single_lattice_doc("A17E7", {"A17", "E7"}, {});
  CHECK_THROWS_AS(parse_glue_document(order), std::invalid_argument);

  codec::Json short_vec = single_lattice_doc("D24", {"D24"}, {{"1/2"}});
  CHECK_THROWS_AS(parse_glue_document(short_vec), std::invalid_argument);
}

TEST_CASE("bad glue is caught by the named invariant") {
  auto expect_check = [](const codec::Json& doc, const std::string& check) {
    auto g = parse_glue_document(doc).front();
    try {
      assemble_niemeier(g);
      FAIL("assembly should fail");
    } catch (const InvariantError& e) {
      CHECK(e.module() == "niemeier");
      CHECK(e.check() == check);
    }
  };
  // Not in the dual lattice.
  std::vector<std::string> vec(24, "0");
  vec[0] = "1/2";
  expect_check(single_lattice_doc("D24", {"D24"}, {vec}), "glue-in-dual");
  auto d = discriminant_group(cartan_gram(make_ade(Family::D, 24)));
  std::vector<std::string> vclass;
  for (const auto& x : d.dual_basis().row_vector(0)) vclass.push_back(to_string(x));
  // D24 glued by the vector class: odd.
  expect_check(single_lattice_doc("D24", {"D24"}, {vclass}), "even");
  // No glue at all: not unimodular.
  expect_check(single_lattice_doc("D24", {"D24"}, {}), "unimodular");
  // Components with different Coxeter numbers.
  expect_check(single_lattice_doc("A16E8", {"E8", "A16"}, {}), "coxeter-equal");
}

TEST_CASE("E8^3") {
  const auto& n = lattice("E8^3");
  CHECK(n.codewords().size() == 1);
  CHECK(n.coxeter() == 30);
  CHECK(n.lattice().pair(n.rho(), n.rho()) == -1860);
  CHECK(n.root_count() == 720);
  CHECK(canonical_representative(n, n.codewords()[0]) == IntVector(24, 0));
}

TEST_CASE("D24") {
  const auto& n = lattice("D24");
  CHECK(n.codewords().size() == 2);
  CHECK(n.coxeter() == 46);
  CHECK(n.root_count() == 24 * 46);
  CHECK(n.lattice().pair(n.rho(), n.rho()) == -4324);
  IntVector v = canonical_representative(n, nonzero_codeword(n));
  CHECK(n.lattice().pair(v, v) == -6);
  // v is the dual-basis vector of an m = 1 node.
  RatVector theta = n.to_theta(to_rational(v));
  const auto& comp = n.component(0);
  bool found = false;
  for (std::size_t j : comp.j_set) found = found || theta == comp.disc.dual_basis().row_vector(j);
  CHECK(found);
}

TEST_CASE("A24") {
  const auto& n = lattice("A24");
  CHECK(n.coxeter() == 25);
  CHECK(n.codewords().size() == 5);
  for (const auto& c : n.codewords()) {
    CHECK(c.classes[0][0] % 5 == 0);
    IntVector v = canonical_representative(n, c);
    RatVector theta = n.to_theta(to_rational(v));
    CHECK(n.class_of(theta) == c);
    if (c.classes[0][0] == 0) {
      CHECK(theta == RatVector(24, Rat(0)));
      continue;
    }
    const auto& comp = n.component(0);
    bool found = false;
    for (std::size_t j : comp.j_set) found = found || theta == comp.disc.dual_basis().row_vector(j);
    CHECK(found);
  }
}

TEST_CASE("A1^24") {
  const auto& n = lattice("A1^24");
  CHECK(n.coxeter() == 2);
  CHECK(n.codewords().size() == 4096);
  CHECK(n.lattice().pair(n.rho(), n.rho()) == -12);
  // The code is the Golay code: weights 0, 8, 12, 16, 24.
  std::map<int, int> weights;
  for (const auto& c : n.codewords()) {
    int w = 0;
    for (const auto& x : c.classes) w += x[0] != 0;
    ++weights[w];
  }
  CHECK(weights == std::map<int, int>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
}

TEST_CASE("all 23 lattices satisfy the Niemeier invariants") {
  for (const auto& g : glue()) {
    CAPTURE(g.label);
    const auto& n = lattice(g.label);
    CHECK(n.lattice().is_even());
    CHECK(abs(determinant(n.gram())) == 1);
    CHECK(n.gram().rows() == 24);
    // Roots: the union of the component root systems, counted by Weyl orbits.
    std::size_t expected_roots = 0;
    Int h = root_component(g.components.front()).coxeter;
    for (const auto& t : g.components) {
      expected_roots += oracle::weyl_orbit_roots(cartan_gram(t).gram()).size();
      CHECK(root_component(t).coxeter == h);
    }
    CHECK(n.root_count() == expected_roots);
    CHECK(Int(static_cast<unsigned long>(expected_roots)) == 24 * h);
    CHECK(n.coxeter() == h);
    CHECK(n.lattice().pair(n.rho(), n.rho()) == -2 * h * (h + 1));
    Int code = static_cast<unsigned long>(n.codewords().size());
    CHECK(code * code == abs(determinant(n.root_gram())));
    // rho pairs to 1 with each simple root.
    for (std::size_t k = 0; k < 24; ++k) CHECK(n.lattice().pair(n.rho(), n.simple_root(k)) == 1);
    auto w = weyl_data(n);
    CHECK(w.h == h);
    CHECK(w.rho == n.rho());
  }
}

TEST_CASE("canonical representatives form a transversal section") {
  for (const std::string label : {"D12^2", "A8^3", "D4^6", "A5^4D4", "E6^4"}) {
    CAPTURE(label);
    const auto& n = lattice(label);
    const auto& words = n.codewords();
    std::vector<RatVector> reps;
    for (const auto& c : words) {
      IntVector v = canonical_representative(n, c);
      reps.push_back(n.to_theta(to_rational(v)));
      CHECK(n.class_of(reps.back()) == c);
    }
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j) {
        Codeword s = n.add(words[i], words[j]);
        std::size_t k = static_cast<std::size_t>(std::find(words.begin(), words.end(), s) - words.begin());
        REQUIRE(k < words.size());
        RatVector d(24);
        for (std::size_t t = 0; t < 24; ++t) d[t] = reps[i][t] + reps[j][t] - reps[k][t];
        CHECK(is_integral(d));
      }
  }
}

TEST_CASE("exports") {
  const auto& n = lattice("D24");
  auto j = export_niemeier(n);
  CHECK(j["label"] == "D24");
  CHECK(codec::decode_int_matrix(j["gram"]) == n.gram());
  CHECK(codec::decode_int_vector(j["rho"]) == n.rho());
  std::string gap = export_niemeier_gap(n);
  CHECK(gap.find("coxeter := 46") != std::string::npos);
  CHECK(gap.rfind("rec(", 0) == 0);
}
