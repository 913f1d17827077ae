#include "leech/lll.hpp"

namespace leech {

namespace {

IntMatrix negated(const IntMatrix& m) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < out.rows(); ++i) out.negate_row(i);
  return out;
}

class GramLll {
 public:
  GramLll(IntMatrix gram, Rat delta)
      : n_(gram.rows()),
        g_(std::move(gram)),
        t_(IntMatrix::identity(n_)),
        mu_(n_, n_),
        b_(n_),
        delta_(std::move(delta)) {}

  void run() {
    if (n_ == 0) return;
    compute_row(0);
    std::size_t k = 1, kmax = 0;
    while (k < n_) {
      if (k > kmax) {
        kmax = k;
        compute_row(k);
      }
      size_reduce(k, k - 1);
      Rat m = mu_(k, k - 1);
      if (b_[k] < (delta_ - m * m) * b_[k - 1]) {
        swap(k, kmax);
        k = std::max<std::size_t>(1, k - 1);
      } else {
        for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
        ++k;
      }
    }
  }

  const IntMatrix& gram() const { return g_; }
  const IntMatrix& transform() const { return t_; }

 private:
  void compute_row(std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      Rat s = Rat(g_(k, j));
      for (std::size_t i = 0; i < j; ++i) s -= mu_(j, i) * mu_(k, i) * b_[i];
      mu_(k, j) = s / b_[j];
    }
    Rat s = Rat(g_(k, k));
    for (std::size_t j = 0; j < k; ++j) s -= mu_(k, j) * mu_(k, j) * b_[j];
    b_[k] = s;
    if (b_[k] <= 0) throw std::invalid_argument("LLL input is not positive definite");
  }

  // b_k <- b_k - q b_l
  void size_reduce(std::size_t k, std::size_t l) {
    if (abs(mu_(k, l)) * 2 <= 1) return;
    Int q = round_half_up(mu_(k, l));
    Int mq = -q;
    t_.add_row_multiple(k, l, mq);
    g_.add_row_multiple(k, l, mq);
    g_.add_col_multiple(k, l, mq);
    mu_(k, l) -= Rat(q);
    for (std::size_t i = 0; i < l; ++i) mu_(k, i) -= Rat(q) * mu_(l, i);
  }

  void swap(std::size_t k, std::size_t kmax) {
    t_.swap_rows(k, k - 1);
    g_.swap_rows(k, k - 1);
    g_.swap_cols(k, k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu_(k, j), mu_(k - 1, j));
    Rat m = mu_(k, k - 1);
    Rat bnew = b_[k] + m * m * b_[k - 1];
    mu_(k, k - 1) = m * b_[k - 1] / bnew;
    b_[k] = b_[k - 1] * b_[k] / bnew;
    b_[k - 1] = bnew;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Rat t = mu_(i, k);
      mu_(i, k) = mu_(i, k - 1) - m * t;
      mu_(i, k - 1) = t + mu_(k, k - 1) * mu_(i, k);
    }
  }

  std::size_t n_;
  IntMatrix g_;
  IntMatrix t_;
  RatMatrix mu_;
  RatVector b_;
  Rat delta_;
};

}  // namespace

GramSchmidt gram_schmidt(const IntMatrix& positive_gram) {
  const std::size_t n = positive_gram.rows();
  GramSchmidt gs{RatMatrix::identity(n), RatVector(n)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Rat s = Rat(positive_gram(k, j));
      for (std::size_t i = 0; i < j; ++i) s -= gs.mu(j, i) * gs.mu(k, i) * gs.b[i];
      gs.mu(k, j) = s / gs.b[j];
    }
    Rat s = Rat(positive_gram(k, k));
    for (std::size_t j = 0; j < k; ++j) s -= gs.mu(k, j) * gs.mu(k, j) * gs.b[j];
    if (s <= 0) throw std::invalid_argument("Gram matrix is not positive definite");
    gs.b[k] = s;
  }
  return gs;
}

LllResult lll_reduce(const LatticeDesc& lattice, const Rat& delta) {
  if (!lattice.is_definite()) throw std::invalid_argument("LLL requires a definite lattice");
  if (delta <= Rat(1, 4) || delta > 1) throw std::invalid_argument("LLL delta must lie in (1/4, 1]");
  const bool negative = lattice.signature() == Signature::NegativeDefinite;
  GramLll lll(negative ? negated(lattice.gram()) : lattice.gram(), delta);
  lll.run();
  IntMatrix g = negative ? negated(lll.gram()) : lll.gram();
  return {LatticeDesc(std::move(g), lattice.signature()), lll.transform()};
}

bool is_lll_reduced(const IntMatrix& positive_gram, const Rat& delta) {
  GramSchmidt gs = gram_schmidt(positive_gram);
  const std::size_t n = positive_gram.rows();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j)
      if (abs(gs.mu(k, j)) * 2 > 1) return false;
    Rat m = gs.mu(k, k - 1);
    if (gs.b[k] < (delta - m * m) * gs.b[k - 1]) return false;
  }
  return true;
}

}  // namespace leech
