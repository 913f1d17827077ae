#include "leech/roots.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "leech/normal_form.hpp"

namespace leech {

ADEType make_ade(Family family, int rank) {
  bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
            (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) throw std::invalid_argument("invalid ADE type " + to_string(ADEType{family, rank}));
  return {family, rank};
}

std::string to_string(const ADEType& t) {
  const char* f = t.family == Family::A ? "A" : t.family == Family::D ? "D" : "E";
  return f + std::to_string(t.rank);
}

ADEType parse_ade(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("malformed ADE type '" + text + "'");
  Family f;
  switch (text[0]) {
    case 'A': f = Family::A; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw std::invalid_argument("malformed ADE type '" + text + "'");
  }
  const std::string digits = text.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 3)
    throw std::invalid_argument("malformed ADE type '" + text + "'");
  return make_ade(f, std::stoi(digits));
}

bool canonical_before(const ADEType& a, const ADEType& b) { return b < a; }

LatticeDesc cartan_gram(const ADEType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  IntMatrix g(n, n);
  auto link = [&g](std::size_t a, std::size_t b) { g(a, b) = g(b, a) = 1; };
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 1, n - 3);
      break;
    case Family::E:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 1, 2);
      break;
  }
  return LatticeDesc(std::move(g), Signature::NegativeDefinite);
}

IntMatrix extended_cartan_gram(const ADEType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  const IntMatrix g = cartan_gram(t).gram();
  IntMatrix e(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = g(i, j);
  e(n, n) = -2;
  auto link = [&e, n](std::size_t a, const Int& w) { e(a, n) = e(n, a) = w; };
  switch (t.family) {
    case Family::A:
      if (n == 1) {
        link(0, 2);
      } else {
        link(0, 1);
        link(n - 1, 1);
      }
      break;
    case Family::D: link(1, 1); break;
    case Family::E:
      if (n == 6) link(5, 1);
      else if (n == 7) link(0, 1);
      else link(6, 1);
      break;
  }
  return e;
}

SimpleSystem extract_simple_system(const std::vector<IntVector>& roots, const IntMatrix& gram) {
  if (roots.empty()) throw std::invalid_argument("empty root set");
  std::vector<Point> positive;
  for (const auto& r : roots) {
    auto it = std::find_if(r.begin(), r.end(), [](const Int& x) { return x != 0; });
    if (it == r.end()) throw std::invalid_argument("zero vector in root set");
    if (*it > 0) positive.push_back(to_point(r));
  }
  std::sort(positive.begin(), positive.end());
  positive.erase(std::unique(positive.begin(), positive.end()), positive.end());
  std::set<Point> pos_set(positive.begin(), positive.end());

  const std::size_t dim = gram.rows();
  std::vector<std::vector<std::int64_t>> g64(dim, std::vector<std::int64_t>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g64[i][j] = gram(i, j).get_si();
  auto pair = [&](const Point& a, const Point& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) s += a[i] * g64[i][j] * b[j];
    }
    return s;
  };

  std::set<Point> decomposable;
  Point sum(dim);
  for (std::size_t a = 0; a < positive.size(); ++a)
    for (std::size_t b = a + 1; b < positive.size(); ++b) {
      if (pair(positive[a], positive[b]) != 1) continue;  // p + q has norm -2 only then
      for (std::size_t i = 0; i < dim; ++i) sum[i] = positive[a][i] + positive[b][i];
      if (pos_set.count(sum)) decomposable.insert(sum);
    }
  std::vector<Point> simple;
  for (const auto& p : positive)
    if (!decomposable.count(p)) simple.push_back(p);

  // Connected components of the dual graph.
  const std::size_t k = simple.size();
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < k; ++v)
        if (comp[v] < 0 && pair(simple[u], simple[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  SimpleSystem out;
  out.components.resize(static_cast<std::size_t>(ncomp));
  for (std::size_t s = 0; s < k; ++s) out.components[static_cast<std::size_t>(comp[s])].push_back(to_int_vector(simple[s]));
  // simple is sorted, so each component is sorted and components are ordered by smallest root
  return out;
}

namespace {

[[noreturn]] void not_dynkin(const std::string& why) { throw InvariantError("roots", "dynkin-type", why); }

// Nodes of the arm starting at `first` (adjacent to `from`), walking away from it.
std::vector<std::size_t> walk_arm(const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
                                  std::size_t first) {
  std::vector<std::size_t> arm{first};
  std::size_t prev = from, cur = first;
  for (;;) {
    std::size_t next = adj.size();
    for (std::size_t v : adj[cur])
      if (v != prev) next = v;
    if (next == adj.size()) break;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

}  // namespace

IdentifiedComponent identify_component(const IntMatrix& pairing) {
  const std::size_t n = pairing.rows();
  if (n == 0 || !is_symmetric(pairing)) not_dynkin("pairing matrix is empty or not symmetric");
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pairing(i, i) != -2) not_dynkin("diagonal entry is not -2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (pairing(i, j) == 1) {
        adj[i].push_back(j);
        if (i < j) ++edges;
      } else if (pairing(i, j) != 0) {
        not_dynkin("off-diagonal entry outside {0, 1}");
      }
    }
  }
  if (edges != n - 1) not_dynkin("diagram is not a tree");
  {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          ++count;
          stack.push_back(v);
        }
    }
    if (count != n) not_dynkin("diagram is disconnected");
  }

  std::vector<std::size_t> branches;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) not_dynkin("node of degree > 3");
    if (adj[i].size() == 3) branches.push_back(i);
  }
  IdentifiedComponent out;
  const int rank = static_cast<int>(n);
  if (branches.empty()) {
    std::size_t start = 0;
    if (n > 1)
      while (adj[start].size() != 1) ++start;
    out.type = make_ade(Family::A, rank);
    out.order.push_back(start);
    if (n > 1)
      for (std::size_t v : walk_arm(adj, start, adj[start][0])) out.order.push_back(v);
  } else {
    if (branches.size() != 1) not_dynkin("more than one branch node");
    const std::size_t c = branches[0];
    std::vector<std::vector<std::size_t>> arms;
    for (std::size_t v : adj[c]) arms.push_back(walk_arm(adj, c, v));
    std::stable_sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
    });
    const std::size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
    if (l0 == 1 && l1 == 1) {
      out.type = make_ade(Family::D, rank);
      for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it) out.order.push_back(*it);
      out.order.push_back(c);
      out.order.push_back(arms[0][0]);
      out.order.push_back(arms[1][0]);
    } else if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
      out.type = make_ade(Family::E, rank);
      out.order.push_back(arms[1][1]);
      out.order.push_back(arms[1][0]);
      out.order.push_back(c);
      for (std::size_t v : arms[2]) out.order.push_back(v);
      out.order.push_back(arms[0][0]);
    } else {
      not_dynkin("branch arms do not match D or E");
    }
  }
  // The relabelled diagram must be the template.
  const IntMatrix tmpl = cartan_gram(out.type).gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pairing(out.order[i], out.order[j]) != tmpl(i, j)) not_dynkin("relabelled diagram differs from template");
  return out;
}

std::vector<ADEType> identify_ade_decomposition(const SimpleSystem& theta, const IntMatrix& gram) {
  std::vector<ADEType> types;
  for (const auto& comp : theta.components) {
    IntMatrix p(comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) p(i, j) = bilinear(comp[i], gram, comp[j]);
    types.push_back(identify_component(p).type);
  }
  std::sort(types.begin(), types.end(), canonical_before);
  return types;
}

HighestRoot highest_root_and_m(const ADEType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  IntMatrix ext = extended_cartan_gram(t);
  IntMatrix ker = integer_kernel(ext);
  if (ker.rows() != 1) throw InvariantError("roots", "extended-kernel-rank", "kernel rank " + std::to_string(ker.rows()));
  IntVector m = ker.row_vector(0);
  if (m[0] < 0)
    for (auto& x : m) x = -x;
  for (const auto& x : m)
    if (x <= 0) throw InvariantError("roots", "m-positive", "kernel generator is not positive");
  if (m[n] != 1) throw InvariantError("roots", "m-extending-node", "m(theta) = " + m[n].get_str());
  IntVector mu(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n));
  const IntMatrix g = cartan_gram(t).gram();
  if (bilinear(mu, g, mu) != -2) throw InvariantError("roots", "highest-root-norm", "mu is not a root");
  for (std::size_t k = 0; k < n; ++k)
    if (-(g * mu)[k] != ext(n, k)) throw InvariantError("roots", "extending-node", "theta differs from -mu");
  return {mu, m};
}

RatVector weyl_vector_component(const ADEType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  RatVector rho = solve(to_rational(cartan_gram(t).gram()), RatVector(n, Rat(1)));
  return rho;
}

IntMatrix reflection_matrix(const IntMatrix& gram, std::size_t k) {
  IntMatrix s = IntMatrix::identity(gram.rows());
  for (std::size_t j = 0; j < gram.cols(); ++j) s(k, j) += gram(k, j);
  return s;
}

Int coxeter_number(const ADEType& t, CoxeterMode mode) {
  const auto n = static_cast<std::size_t>(t.rank);
  switch (mode) {
    case CoxeterMode::RootCount: {
      std::size_t roots = short_vectors(cartan_gram(t), Int(2)).size();
      if (roots % n != 0) throw InvariantError("roots", "coxeter-root-count", "root count not divisible by rank");
      return Int(static_cast<unsigned long>(roots / n));
    }
    case CoxeterMode::WeylNorm: {
      RatVector rho = weyl_vector_component(t);
      Rat norm = 0;
      for (const auto& x : rho) norm += x;  // rho^T G rho = rho . (1, ..., 1)
      Rat x = Rat(-12) * norm / Rat(static_cast<long>(n));
      Int prod = to_integer(x, "coxeter-weyl-norm");  // h(h + 1)
      Int disc = 1 + 4 * prod;
      Int root = sqrt(disc);
      if (root * root != disc) throw InvariantError("roots", "coxeter-weyl-norm", "h(h+1) has no integer solution");
      return (root - 1) / 2;
    }
    case CoxeterMode::HighestRoot: {
      HighestRoot hr = highest_root_and_m(t);
      Int s = 0;
      for (const auto& c : hr.highest_root) s += c;
      return s + 1;
    }
    case CoxeterMode::CoxeterElement: {
      const IntMatrix g = cartan_gram(t).gram();
      IntMatrix c = IntMatrix::identity(n);
      for (std::size_t k = 0; k < n; ++k) c = c * reflection_matrix(g, k);
      IntMatrix p = c;
      const IntMatrix id = IntMatrix::identity(n);
      for (long order = 1; order <= 10000; ++order) {
        if (p == id) return Int(order);
        p = p * c;
      }
      throw InvariantError("roots", "coxeter-element-order", "order exceeds search limit");
    }
  }
  throw std::invalid_argument("unknown Coxeter mode");
}

Int coxeter_number(const ADEType& t) {
  Int h = coxeter_number(t, CoxeterMode::RootCount);
  for (CoxeterMode m : {CoxeterMode::WeylNorm, CoxeterMode::HighestRoot, CoxeterMode::CoxeterElement}) {
    Int other = coxeter_number(t, m);
    if (other != h)
      throw InvariantError("roots", "coxeter-agreement",
                           to_string(t) + ": " + h.get_str() + " vs " + other.get_str());
  }
  return h;
}

namespace {

RootComponent build_component(const ADEType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  LatticeDesc lattice = cartan_gram(t);
  HighestRoot hr = highest_root_and_m(t);
  Int h = coxeter_number(t);
  RatVector rho = weyl_vector_component(t);
  DiscriminantGroup disc = discriminant_group(lattice);

  Int msum = 0;
  for (const auto& x : hr.m) msum += x;
  if (msum != h) throw InvariantError("roots", "m-sum", to_string(t) + ": sum of m is " + msum.get_str());
  Rat rho_norm = bilinear(rho, to_rational(lattice.gram()), rho);
  Rat expected_norm(Int(-Int(static_cast<unsigned long>(n)) * h * (h + 1)), Int(12));
  expected_norm.canonicalize();
  if (rho_norm != expected_norm)
    throw InvariantError("roots", "weyl-norm", to_string(t));

  std::vector<std::size_t> j_set;
  std::vector<IntVector> j_classes;
  for (std::size_t j = 0; j < n; ++j) {
    if (hr.m[j] != 1) continue;
    j_set.push_back(j);
    j_classes.push_back(disc.class_of(disc.dual_basis().row_vector(j)));
  }
  // j -> r_j^dual mod <Sigma> is a bijection onto the nonzero classes.
  std::set<IntVector> distinct(j_classes.begin(), j_classes.end());
  if (Int(static_cast<unsigned long>(j_set.size())) != disc.order() - 1 || distinct.size() != j_set.size() ||
      std::any_of(j_classes.begin(), j_classes.end(), [&](const IntVector& c) { return disc.is_zero(c); }))
    throw InvariantError("roots", "j-bijection", to_string(t));

  RootComponent c{t,
                  std::move(lattice),
                  hr.m,
                  hr.highest_root,
                  h,
                  std::move(rho),
                  std::move(disc),
                  std::move(j_set),
                  std::move(j_classes),
                  static_cast<std::size_t>(n * h.get_ui())};
  return c;
}

}  // namespace

const RootComponent& root_component(const ADEType& t) {
  static std::mutex mutex;
  static std::map<ADEType, std::unique_ptr<RootComponent>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, std::make_unique<RootComponent>(build_component(t))).first;
  return *it->second;
}

RatVector canonical_rep_component(const RootComponent& c, const IntVector& alpha) {
  const auto& factors = c.disc.invariant_factors();
  if (alpha.size() != factors.size()) throw std::invalid_argument("class has the wrong number of components");
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (alpha[k] < 0 || alpha[k] >= factors[k]) throw std::invalid_argument("class residue out of range");
  if (c.disc.is_zero(alpha)) return RatVector(c.rank(), Rat(0));
  for (std::size_t i = 0; i < c.j_set.size(); ++i)
    if (c.j_classes[i] == alpha) return c.disc.dual_basis().row_vector(c.j_set[i]);
  throw std::invalid_argument("class has no canonical representative");
}

}  // namespace leech
