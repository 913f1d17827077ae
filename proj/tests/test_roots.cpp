#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "leech/niemeier.hpp"
#include "leech/normal_form.hpp"
#include "leech/roots.hpp"
#include "oracles.hpp"

using namespace leech;

namespace {

std::vector<ADEType> niemeier_component_types() {
  std::set<ADEType> types;
  for (const auto& g : load_glue_file(default_glue_path()))
    for (const auto& t : g.components) types.insert(t);
  return {types.begin(), types.end()};
}

std::vector<IntVector> all_roots(const LatticeDesc& l) {
  std::vector<IntVector> out;
  for (const auto& p : short_vectors(l, Int(2))) out.push_back(to_int_vector(p));
  return out;
}

// A simple system: every root is a combination of it with coefficients all >= 0 or all <= 0.
bool is_simple_system(const std::vector<IntVector>& simple, const std::vector<IntVector>& roots) {
  const std::size_t n = simple.size();
  RatMatrix b(n, roots.front().size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = simple[i][j];
  RatMatrix bt = b.transpose();
  for (const auto& r : roots) {
    // Solve c * b = r through the normal equations.
    RatVector c = solve(b * bt, b * to_rational(r));
    if (c * b != to_rational(r) || !is_integral(c)) return false;
    bool pos = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x >= 0; });
    bool negv = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x <= 0; });
    if (!pos && !negv) return false;
  }
  return true;
}

Int standard_coxeter(const ADEType& t) {
  // Number of roots divided by the rank, with the roots from the Weyl orbit.
  auto roots = oracle::weyl_orbit_roots(cartan_gram(t).gram());
  return Int(static_cast<unsigned long>(roots.size())) / t.rank;
}

}  // namespace

TEST_CASE("ADE types parse, print and validate") {
  CHECK(to_string(parse_ade("D16")) == "D16");
  CHECK(parse_ade("E8") == make_ade(Family::E, 8));
  CHECK_THROWS_AS(make_ade(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_ade(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_ade(Family::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(parse_ade("B3"), std::invalid_argument);
  CHECK(canonical_before(make_ade(Family::E, 6), make_ade(Family::D, 10)));
  CHECK(canonical_before(make_ade(Family::A, 5), make_ade(Family::A, 4)));
}

TEST_CASE("Cartan Gram matrices") {
  CHECK(cartan_gram(make_ade(Family::A, 1)).gram() == IntMatrix{{-2}});
  CHECK(cartan_gram(make_ade(Family::A, 2)).gram() == IntMatrix{{-2, 1}, {1, -2}});
  IntMatrix d4 = cartan_gram(make_ade(Family::D, 4)).gram();
  CHECK(d4(1, 0) == 1);
  CHECK(d4(1, 2) == 1);
  CHECK(d4(1, 3) == 1);
  CHECK(d4(0, 2) == 0);
  CHECK(d4(0, 3) == 0);
  CHECK(d4(2, 3) == 0);
  for (auto t : niemeier_component_types()) {
    LatticeDesc l = cartan_gram(t);
    CHECK(l.signature() == Signature::NegativeDefinite);
    CHECK(definite_signature(l.gram()) == Signature::NegativeDefinite);
    for (std::size_t i = 0; i < l.rank(); ++i)
      for (std::size_t j = 0; j < l.rank(); ++j)
        if (i != j) CHECK((l.gram()(i, j) == 0 || l.gram()(i, j) == 1));
  }
}

TEST_CASE("simple systems of A1, A2, E8") {
  auto a1 = cartan_gram(make_ade(Family::A, 1));
  auto s1 = extract_simple_system(all_roots(a1), a1.gram());
  REQUIRE(s1.components.size() == 1);
  CHECK(s1.components[0] == std::vector<IntVector>{{Int(1)}});

  auto a2 = cartan_gram(make_ade(Family::A, 2));
  auto r2 = all_roots(a2);
  auto s2 = extract_simple_system(r2, a2.gram());
  REQUIRE(s2.components.size() == 1);
  REQUIRE(s2.components[0].size() == 2);
  const auto& th = s2.components[0];
  CHECK(oracle::form(a2.gram(), th[0], th[1]) == 1);
  CHECK(is_simple_system(th, r2));

  auto e8 = cartan_gram(make_ade(Family::E, 8));
  auto r8 = all_roots(e8);
  auto s8 = extract_simple_system(r8, e8.gram());
  REQUIRE(s8.components.size() == 1);
  CHECK(s8.components[0].size() == 8);
  CHECK(is_simple_system(s8.components[0], r8));
  CHECK(identify_ade_decomposition(s8, e8.gram()) == std::vector<ADEType>{make_ade(Family::E, 8)});
}

TEST_CASE("type recognition is independent of the basis") {
  std::mt19937 rng(29);
  std::vector<ADEType> types{make_ade(Family::E, 6), make_ade(Family::D, 5), make_ade(Family::A, 2), make_ade(Family::A, 1)};
  std::vector<IntMatrix> blocks;
  for (auto t : types) blocks.push_back(cartan_gram(t).gram());
  IntMatrix g = block_diagonal(blocks);
  std::vector<ADEType> expected = types;
  std::sort(expected.begin(), expected.end(), canonical_before);
  for (int trial = 0; trial < 3; ++trial) {
    IntMatrix u = oracle::random_unimodular(g.rows(), rng, 25);
    LatticeDesc l(u * g * u.transpose(), Signature::NegativeDefinite);
    auto roots = all_roots(l);
    auto theta = extract_simple_system(roots, l.gram());
    CHECK(identify_ade_decomposition(theta, l.gram()) == expected);
    std::size_t total = 0;
    for (const auto& c : theta.components) total += c.size();
    CHECK(total == g.rows());
  }
}

TEST_CASE("non-ADE diagrams are rejected") {
  // Affine A2: a triangle.
  IntMatrix tri{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}};
  CHECK_THROWS_AS(identify_component(tri), InvariantError);
  CHECK_THROWS_AS(identify_component(extended_cartan_gram(make_ade(Family::D, 5))), InvariantError);
}

TEST_CASE("highest root and m") {
  for (int n = 1; n <= 8; ++n) {
    auto hm = highest_root_and_m(make_ade(Family::A, n));
    CHECK(std::all_of(hm.m.begin(), hm.m.end(), [](const Int& x) { return x == 1; }));
  }
  auto d4 = highest_root_and_m(make_ade(Family::D, 4));
  CHECK(d4.m == IntVector{1, 2, 1, 1, 1});
  CHECK(std::accumulate(d4.m.begin(), d4.m.end(), Int(0)) == 6);
  auto e8 = highest_root_and_m(make_ade(Family::E, 8));
  CHECK(std::accumulate(e8.m.begin(), e8.m.end(), Int(0)) == 30);

  for (auto t : niemeier_component_types()) {
    auto hm = highest_root_and_m(t);
    IntMatrix ext = extended_cartan_gram(t);
    CHECK(ext * hm.m == IntVector(ext.rows(), 0));
    CHECK(hm.m.back() == 1);
    CHECK(std::accumulate(hm.m.begin(), hm.m.end(), Int(0)) == standard_coxeter(t));
    // mu is a root.
    CHECK(oracle::form(cartan_gram(t).gram(), hm.highest_root, hm.highest_root) == -2);
    // Removing any node with m = 1 leaves an ordinary diagram of the same type.
    const std::size_t k = ext.rows();
    for (std::size_t d = 0; d < k; ++d) {
      if (hm.m[d] != 1) continue;
      IntMatrix sub(k - 1, k - 1);
      for (std::size_t i = 0, ii = 0; i < k; ++i) {
        if (i == d) continue;
        for (std::size_t j = 0, jj = 0; j < k; ++j)
          if (j != d) sub(ii, jj++) = ext(i, j);
        ++ii;
      }
      CHECK(identify_component(sub).type == t);
    }
  }
}

TEST_CASE("Coxeter numbers in all four characterisations") {
  for (auto mode : {CoxeterMode::RootCount, CoxeterMode::WeylNorm, CoxeterMode::HighestRoot, CoxeterMode::CoxeterElement}) {
    CHECK(coxeter_number(make_ade(Family::A, 1), mode) == 2);
    CHECK(coxeter_number(make_ade(Family::A, 2), mode) == 3);
    CHECK(coxeter_number(make_ade(Family::E, 8), mode) == 30);
  }
  for (auto t : niemeier_component_types()) {
    Int h = standard_coxeter(t);
    for (auto mode : {CoxeterMode::RootCount, CoxeterMode::WeylNorm, CoxeterMode::HighestRoot, CoxeterMode::CoxeterElement})
      CHECK(coxeter_number(t, mode) == h);
    CHECK(coxeter_number(t) == h);
    CHECK(root_component(t).root_count == static_cast<std::size_t>(t.rank) * h.get_ui());
  }
}

TEST_CASE("Weyl vectors") {
  auto a1 = weyl_vector_component(make_ade(Family::A, 1));
  CHECK(a1 == RatVector{Rat(-1, 2)});
  CHECK(bilinear(a1, to_rational(cartan_gram(make_ade(Family::A, 1)).gram()), a1) == Rat(-1, 2));
  auto a2 = weyl_vector_component(make_ade(Family::A, 2));
  CHECK(a2 == RatVector{Rat(-1), Rat(-1)});
  CHECK(bilinear(a2, to_rational(cartan_gram(make_ade(Family::A, 2)).gram()), a2) == -2);
  auto e8 = weyl_vector_component(make_ade(Family::E, 8));
  CHECK(bilinear(e8, to_rational(cartan_gram(make_ade(Family::E, 8)).gram()), e8) == -620);
  for (auto t : niemeier_component_types()) {
    RatVector rho = weyl_vector_component(t);
    RatMatrix g = to_rational(cartan_gram(t).gram());
    CHECK(g * rho == RatVector(t.rank, Rat(1)));
    Int h = standard_coxeter(t);
    Rat expected(-t.rank * h * (h + 1), 12);
    expected.canonicalize();
    CHECK(bilinear(rho, g, rho) == expected);
  }
}

TEST_CASE("canonical representatives and the J bijection") {
  const auto& a1 = root_component(make_ade(Family::A, 1));
  CHECK(canonical_rep_component(a1, a1.disc.zero()) == RatVector{Rat(0)});
  IntVector one = a1.disc.class_of(RatVector{Rat(1, 2)});
  CHECK(canonical_rep_component(a1, one) == RatVector{Rat(-1, 2)});

  const auto& a2 = root_component(make_ade(Family::A, 2));
  std::set<RatVector> reps;
  for (Int k = 1; k < 3; ++k) {
    RatVector r = canonical_rep_component(a2, IntVector{k});
    CHECK(a2.disc.class_of(r) == IntVector{k});
    reps.insert(r);
  }
  std::set<RatVector> duals{a2.disc.dual_basis().row_vector(0), a2.disc.dual_basis().row_vector(1)};
  CHECK(reps == duals);

  for (auto t : niemeier_component_types()) {
    const auto& c = root_component(t);
    CHECK(Int(static_cast<unsigned long>(c.j_set.size())) == c.disc.order() - 1);
    std::set<IntVector> classes;
    for (std::size_t j : c.j_set) {
      CHECK(c.m[j] == 1);
      classes.insert(c.disc.class_of(c.disc.dual_basis().row_vector(j)));
    }
    CHECK(classes.size() == c.j_set.size());
    CHECK(classes.count(c.disc.zero()) == 0);
    CHECK(canonical_rep_component(c, c.disc.zero()) == RatVector(t.rank, Rat(0)));
  }
  CHECK_THROWS_AS(canonical_rep_component(a2, IntVector{1, 1}), std::invalid_argument);
}

TEST_CASE("reflections fix the discriminant classes") {
  for (auto t : niemeier_component_types()) {
    const auto& c = root_component(t);
    const IntMatrix& g = c.lattice.gram();
    for (std::size_t k = 0; k < c.rank(); ++k) {
      RatMatrix s = to_rational(reflection_matrix(g, k));
      for (const auto& x : c.disc.generators()) {
        RatVector sx = s * x;
        RatVector diff(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) diff[i] = sx[i] - x[i];
        CHECK(is_integral(diff));
      }
      // s_k is an isometry of order 2.
      CHECK(s * s == RatMatrix::identity(c.rank()));
    }
  }
}
