#include "leech/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "leech/lll.hpp"

namespace leech {

namespace {

using Wide = __int128;

Wide to_wide(const Int& x) {
  if (!x.fits_slong_p()) throw std::out_of_range("integer too large for the enumeration kernel");
  return static_cast<Wide>(x.get_si());
}

Int from_wide(Wide w) {
  bool neg = w < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(w + 1)) + 1 : static_cast<unsigned __int128>(w);
  std::string digits;
  do {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  } while (u != 0);
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return Int(digits);
}

// A definite lattice prepared for enumeration around a center.
struct Prepared {
  std::size_t n = 0;
  IntMatrix transform;            // original = reduced_coords * transform
  std::vector<std::int64_t> g;    // reduced positive Gram, row-major
  std::vector<double> mu;         // mu[j*n + i] = mu(j, i)
  std::vector<double> b;
  std::vector<double> center;     // center in reduced coordinates
  std::vector<Wide> scaled_center;  // denom * center
  Wide denom = 1;
  Rat bound;                      // on |q(x - c)|
  Wide scaled_bound_num = 0;      // bound * denom^2 = num / den
  Wide scaled_bound_den = 1;
  bool exclude_zero = false;
};

Prepared prepare(const LatticeDesc& lattice, const RatVector* center, const Rat& bound, bool exclude_zero) {
  if (!lattice.is_definite()) throw std::invalid_argument("enumeration requires a definite lattice");
  if (bound <= 0) throw std::invalid_argument("enumeration bound must be positive");
  const std::size_t n = lattice.rank();
  if (center && center->size() != n) throw std::invalid_argument("center has the wrong dimension");

  Prepared p;
  p.n = n;
  p.bound = bound;
  p.exclude_zero = exclude_zero;
  LllResult red = lll_reduce(lattice);
  p.transform = red.transform;
  IntMatrix pos = red.reduced.gram();
  if (lattice.signature() == Signature::NegativeDefinite)
    for (std::size_t i = 0; i < n; ++i) pos.negate_row(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (abs(pos(i, j)) >= Int(1) << 40) throw std::out_of_range("reduced Gram entries too large");
      p.g.push_back(pos(i, j).get_si());
    }
  GramSchmidt gs = gram_schmidt(pos);
  p.mu.assign(n * n, 0.0);
  p.b.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    p.b[i] = gs.b[i].get_d();
    for (std::size_t j = 0; j < n; ++j) p.mu[j * n + i] = gs.mu(j, i).get_d();
  }

  RatVector c(n, Rat(0));
  if (center) c = (*center) * inverse(to_rational(p.transform));
  Int d = common_denominator(c);
  p.denom = to_wide(d);
  for (std::size_t i = 0; i < n; ++i) {
    p.center.push_back(c[i].get_d());
    p.scaled_center.push_back(to_wide(to_integer(Rat(c[i] * d))));
  }
  Rat sb = bound * Rat(d * d);
  p.scaled_bound_num = to_wide(sb.get_num());
  p.scaled_bound_den = to_wide(sb.get_den());

  // Headroom for the exact leaf evaluation: |y_i| <= denom * (|c_i| + radius_i + 1).
  RatMatrix inv = inverse(to_rational(pos));
  double max_y = 0, max_g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = std::sqrt(bound.get_d() * inv(i, i).get_d());
    max_y = std::max(max_y, static_cast<double>(p.denom) * (std::fabs(p.center[i]) + radius + 2));
    for (std::size_t j = 0; j < n; ++j) max_g = std::max(max_g, std::fabs(static_cast<double>(p.g[i * n + j])));
  }
  if (std::log2(max_g + 1) + 2 * std::log2(max_y + 1) + 2 * std::log2(static_cast<double>(n) + 1) > 120)
    throw std::out_of_range("enumeration values exceed the exact leaf kernel range");
  return p;
}

struct Hit {
  Point x;       // reduced coordinates
  Wide value;    // denom^2 * |q(x - c)|
};

class Search {
 public:
  explicit Search(const Prepared& p) : p_(p), x_(p.n, 0), y_(p.n, 0.0) {}

  // Enumerate subtrees whose top coordinate is in `tops`.
  std::vector<Hit> run(const std::vector<std::int64_t>& tops) {
    const std::size_t top = p_.n - 1;
    double budget = p_.bound.get_d();
    double c = p_.center[top];
    for (std::int64_t v : tops) {
      double diff = static_cast<double>(v) - c;
      double rem = budget - p_.b[top] * diff * diff;
      if (rem < -slack()) continue;
      x_[top] = v;
      y_[top] = diff;
      descend(top, rem);
    }
    return std::move(hits_);
  }

  std::vector<std::int64_t> top_range() const {
    const std::size_t top = p_.n - 1;
    return range(p_.center[top], p_.bound.get_d(), top);
  }

 private:
  double slack() const { return 1e-7 * (1.0 + p_.bound.get_d()); }

  std::vector<std::int64_t> range(double center, double rem, std::size_t level) const {
    double radius = std::sqrt(std::max(rem, 0.0) / p_.b[level]);
    double pad = 1e-7 * (1.0 + std::fabs(center) + radius);
    auto lo = static_cast<std::int64_t>(std::ceil(center - radius - pad));
    auto hi = static_cast<std::int64_t>(std::floor(center + radius + pad));
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }

  // Coordinates above `level` are fixed; `rem` is the remaining budget.
  void descend(std::size_t level, double rem) {
    if (level == 0) {
      leaf();
      return;
    }
    const std::size_t i = level - 1;
    const std::size_t n = p_.n;
    double c = p_.center[i];
    for (std::size_t j = i + 1; j < n; ++j) c -= p_.mu[j * n + i] * y_[j];
    // Center for x_i is c (the y-offset is folded in through y_j = x_j - c_j).
    double radius = std::sqrt(std::max(rem, 0.0) / p_.b[i]);
    double pad = 1e-7 * (1.0 + std::fabs(c) + radius);
    auto lo = static_cast<std::int64_t>(std::ceil(c - radius - pad));
    auto hi = static_cast<std::int64_t>(std::floor(c + radius + pad));
    for (std::int64_t v = lo; v <= hi; ++v) {
      double diff = static_cast<double>(v) - c;
      double next = rem - p_.b[i] * diff * diff;
      if (next < -slack()) continue;
      x_[i] = v;
      y_[i] = static_cast<double>(v) - p_.center[i];
      descend(i, next);
    }
  }

  void leaf() {
    const std::size_t n = p_.n;
    if (p_.exclude_zero && std::all_of(x_.begin(), x_.end(), [](std::int64_t v) { return v == 0; })) return;
    // Exact: value = (D x - D c)^T G (D x - D c).
    Wide yv[32];
    for (std::size_t i = 0; i < n; ++i) yv[i] = p_.denom * static_cast<Wide>(x_[i]) - p_.scaled_center[i];
    Wide value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (yv[i] == 0) continue;
      Wide row = 0;
      for (std::size_t j = 0; j < n; ++j) row += static_cast<Wide>(p_.g[i * n + j]) * yv[j];
      value += yv[i] * row;
    }
    if (value * p_.scaled_bound_den > p_.scaled_bound_num) return;
    hits_.push_back({x_, value});
  }

  const Prepared& p_;
  Point x_;
  std::vector<double> y_;
  std::vector<Hit> hits_;
};

std::vector<Hit> search(const Prepared& p, unsigned jobs) {
  if (p.n == 0) return {};
  if (p.n > 32) throw std::invalid_argument("enumeration supports rank <= 32");
  std::vector<std::int64_t> tops = Search(p).top_range();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tops.size())));
  std::vector<std::vector<std::int64_t>> shares(jobs);
  for (std::size_t k = 0; k < tops.size(); ++k) shares[k % jobs].push_back(tops[k]);
  std::vector<std::vector<Hit>> results(jobs);
  if (jobs == 1) {
    results[0] = Search(p).run(shares[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t)
      workers.emplace_back([&, t] { results[t] = Search(p).run(shares[t]); });
    for (auto& w : workers) w.join();
  }
  std::vector<Hit> all;
  for (auto& r : results)
    for (auto& h : r) all.push_back(std::move(h));
  return all;
}

Point to_original(const Prepared& p, const Point& reduced) {
  const std::size_t n = p.n;
  Point out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (reduced[i] != 0) s += Int(static_cast<long>(reduced[i])) * p.transform(i, j);
    if (!s.fits_slong_p()) throw std::out_of_range("enumerated vector does not fit in 64 bits");
    out[j] = s.get_si();
  }
  return out;
}

}  // namespace

std::vector<Point> short_vectors(const LatticeDesc& lattice, const Int& bound, const EnumOptions& opts) {
  Prepared p = prepare(lattice, nullptr, Rat(bound), true);
  std::vector<Point> out;
  for (const Hit& h : search(p, opts.jobs)) out.push_back(to_original(p, h.x));
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Int, std::size_t> norm_counts(const LatticeDesc& lattice, const Int& bound, const EnumOptions& opts) {
  Prepared p = prepare(lattice, nullptr, Rat(bound), true);
  std::map<Int, std::size_t> counts;
  for (const Hit& h : search(p, opts.jobs)) ++counts[from_wide(h.value)];
  return counts;
}

std::vector<Point> affine_shell(const LatticeDesc& lattice, const RatVector& center, const Rat& target,
                                const EnumOptions& opts) {
  Prepared p = prepare(lattice, &center, target, false);
  Rat scaled = target * Rat(from_wide(p.denom) * from_wide(p.denom));
  std::vector<Point> out;
  for (const Hit& h : search(p, opts.jobs))
    if (Rat(from_wide(h.value)) == scaled) out.push_back(to_original(p, h.x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NearPoint> points_near(const LatticeDesc& lattice, const RatVector& center, const Rat& bound,
                                   const EnumOptions& opts) {
  Prepared p = prepare(lattice, &center, bound, false);
  Int d2 = from_wide(p.denom) * from_wide(p.denom);
  std::vector<NearPoint> out;
  for (const Hit& h : search(p, opts.jobs)) out.push_back({to_original(p, h.x), Rat(from_wide(h.value), d2)});
  for (auto& np : out) np.norm.canonicalize();
  std::sort(out.begin(), out.end(), [](const NearPoint& a, const NearPoint& b) { return a.x < b.x; });
  return out;
}

IntVector to_int_vector(const Point& p) {
  IntVector v;
  v.reserve(p.size());
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return v;
}

RatVector to_rat_vector(const Point& p) {
  RatVector v;
  v.reserve(p.size());
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return v;
}

Point to_point(const IntVector& v) {
  Point p;
  p.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::out_of_range("coordinate does not fit in 64 bits");
    p.push_back(x.get_si());
  }
  return p;
}

}  // namespace leech
