#include "leech/normal_form.hpp"

#include <cstdlib>

namespace leech {

namespace {

// Index of the row in [from, rows) with the smallest nonzero |a(i, col)|, or rows if none.
std::size_t smallest_in_column(const IntMatrix& a, std::size_t col, std::size_t from) {
  std::size_t best = a.rows();
  for (std::size_t i = from; i < a.rows(); ++i) {
    if (a(i, col) == 0) continue;
    if (best == a.rows() || abs(a(i, col)) < abs(a(best, col))) best = i;
  }
  return best;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult r{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = r.h;
  IntMatrix& u = r.u;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    for (;;) {
      std::size_t p = smallest_in_column(h, col, pivot_row);
      if (p == h.rows()) break;
      h.swap_rows(p, pivot_row);
      u.swap_rows(p, pivot_row);
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Int q = floor_div(h(i, col), h(pivot_row, col));
        h.add_row_multiple(i, pivot_row, Int(-q));
        u.add_row_multiple(i, pivot_row, Int(-q));
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = floor_div(h(i, col), h(pivot_row, col));
      h.add_row_multiple(i, pivot_row, Int(-q));
      u.add_row_multiple(i, pivot_row, Int(-q));
    }
    ++pivot_row;
  }
  r.rank = pivot_row;
  return r;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = r.s;
  const std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = s.rows(), bj = s.cols();
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j)
          if (s(i, j) != 0 && (bi == s.rows() || abs(s(i, j)) < abs(s(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == s.rows()) return r;  // trailing block is zero
      s.swap_rows(t, bi);
      r.u.swap_rows(t, bi);
      s.swap_cols(t, bj);
      r.v.swap_cols(t, bj);

      bool done = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Int q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, Int(-q));
        r.u.add_row_multiple(i, t, Int(-q));
        if (s(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Int q = floor_div(s(t, j), s(t, t));
        s.add_col_multiple(j, t, Int(-q));
        r.v.add_col_multiple(j, t, Int(-q));
        if (s(t, j) != 0) done = false;
      }
      if (!done) continue;
      // Divisibility: every trailing entry must be a multiple of the pivot.
      std::size_t bad_row = s.rows();
      for (std::size_t i = t + 1; i < s.rows() && bad_row == s.rows(); ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == s.rows()) break;
      s.add_row_multiple(t, bad_row, Int(1));
      r.u.add_row_multiple(t, bad_row, Int(1));
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      r.u.negate_row(t);
    }
  }
  return r;
}

IntMatrix row_module_basis(const IntMatrix& m) {
  HermiteResult h = hermite_normal_form(m);
  return h.h.block(0, 0, h.rank, m.cols());
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Rows of [m | I]; HNF rows whose first k entries vanish span the kernel.
  const std::size_t n = m.rows(), k = m.cols();
  IntMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
    aug(i, k + i) = 1;
  }
  HermiteResult h = hermite_normal_form(aug);
  std::size_t first = 0;
  while (first < h.rank) {
    bool zero = true;
    for (std::size_t j = 0; j < k; ++j)
      if (h.h(first, j) != 0) zero = false;
    if (zero) break;
    ++first;
  }
  IntMatrix ker(h.rank - first, n);
  for (std::size_t i = first; i < h.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) ker(i - first, j) = h.h(i, k + j);
  return row_module_basis(ker);
}

IntMatrix congruence_sublattice(const IntVector& coeffs, const Int& modulus) {
  if (modulus == 0) throw std::invalid_argument("congruence modulus must be nonzero");
  const std::size_t n = coeffs.size();
  IntMatrix m(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) m(i, 0) = coeffs[i];
  m(n, 0) = abs(modulus);
  IntMatrix ker = integer_kernel(m);  // rows (u, t) with c.u + |a| t = 0
  IntMatrix u(ker.rows(), n);
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = ker(i, j);
  return row_module_basis(u);
}

RatMatrix rational_row_module_basis(const RatMatrix& m) {
  Int d = common_denominator(m);
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) = to_integer(Rat(m(i, j) * d));
  IntMatrix b = row_module_basis(scaled);
  RatMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = Rat(b(i, j), d);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j).canonicalize();
  return out;
}

}  // namespace leech
