#include "leech/lattice.hpp"

#include "leech/normal_form.hpp"

namespace leech {

std::string to_string(Signature s) {
  switch (s) {
    case Signature::PositiveDefinite: return "positive-definite";
    case Signature::NegativeDefinite: return "negative-definite";
    case Signature::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

Signature parse_signature(const std::string& text) {
  if (text == "positive-definite") return Signature::PositiveDefinite;
  if (text == "negative-definite") return Signature::NegativeDefinite;
  if (text == "hyperbolic") return Signature::Hyperbolic;
  throw std::invalid_argument("unknown signature tag '" + text + "'");
}

LatticeDesc::LatticeDesc(IntMatrix gram, Signature signature)
    : gram_(std::move(gram)), signature_(signature) {
  if (!is_symmetric(gram_)) throw std::invalid_argument("Gram matrix is not symmetric");
  if (leech::determinant(gram_) == 0) throw std::invalid_argument("Gram matrix is degenerate");
}

LatticeDesc::LatticeDesc(IntMatrix gram, Signature signature, RatMatrix basis, RatMatrix ambient_form)
    : LatticeDesc(std::move(gram), signature) {
  if (basis.rows() != gram_.rows() || ambient_form.rows() != basis.cols())
    throw std::invalid_argument("basis and ambient form dimensions do not match the Gram matrix");
  if (basis * ambient_form * basis.transpose() != to_rational(gram_))
    throw std::invalid_argument("basis does not reproduce the Gram matrix");
  basis_ = std::move(basis);
  ambient_form_ = std::move(ambient_form);
}

bool LatticeDesc::is_even() const {
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Int LatticeDesc::determinant() const { return leech::determinant(gram_); }

Rat LatticeDesc::pair(const RatVector& x, const RatVector& y) const {
  return bilinear(x, to_rational(gram_), y);
}

Int LatticeDesc::pair(const IntVector& x, const IntVector& y) const { return bilinear(x, gram_, y); }

Signature definite_signature(const IntMatrix& gram) {
  if (is_positive_definite(gram)) return Signature::PositiveDefinite;
  IntMatrix neg = gram;
  for (std::size_t i = 0; i < neg.rows(); ++i) neg.negate_row(i);
  if (is_positive_definite(neg)) return Signature::NegativeDefinite;
  throw std::invalid_argument("form is not definite");
}

Int DiscriminantGroup::order() const {
  Int o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

IntVector DiscriminantGroup::class_of(const RatVector& x) const {
  RatVector p = to_rational(gram_) * x;
  if (!is_integral(p)) throw std::invalid_argument("vector is not in the dual lattice");
  IntVector pi = to_integer(p);
  IntVector out(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Int s = dot(left_.row_vector(factor_rows_[k]), pi);
    mpz_fdiv_r(out[k].get_mpz_t(), s.get_mpz_t(), factors_[k].get_mpz_t());
  }
  return out;
}

IntVector DiscriminantGroup::add(const IntVector& a, const IntVector& b) const {
  IntVector out(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Int s = a[k] + b[k];
    mpz_fdiv_r(out[k].get_mpz_t(), s.get_mpz_t(), factors_[k].get_mpz_t());
  }
  return out;
}

IntVector DiscriminantGroup::negate(const IntVector& a) const {
  IntVector out(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Int s = -a[k];
    mpz_fdiv_r(out[k].get_mpz_t(), s.get_mpz_t(), factors_[k].get_mpz_t());
  }
  return out;
}

bool DiscriminantGroup::is_zero(const IntVector& a) const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Int DiscriminantGroup::order_of(const IntVector& a) const {
  Int o = 1;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Int g = gcd(a[k], factors_[k]);
    o = lcm(o, Int(factors_[k] / g));
  }
  return o;
}

DiscriminantGroup discriminant_group(const LatticeDesc& lattice) {
  DiscriminantGroup g;
  g.gram_ = lattice.gram();
  SmithResult snf = smith_normal_form(g.gram_);
  g.left_ = snf.u;
  RatMatrix gram_inv = inverse(to_rational(g.gram_));
  g.dual_basis_ = gram_inv;
  RatMatrix u_inv = inverse(to_rational(snf.u));
  const std::size_t n = g.gram_.rows();
  for (std::size_t k = 0; k < n; ++k) {
    Int d = abs(snf.s(k, k));
    if (d == 0) throw std::invalid_argument("degenerate Gram matrix");
    if (d == 1) continue;
    g.factors_.push_back(d);
    g.factor_rows_.push_back(k);
    // Dual vector whose pairing vector is U^-1 e_k.
    RatVector gen = gram_inv * u_inv.col_vector(k);
    for (auto& x : gen) x -= Rat(floor(x));
    g.generators_.push_back(std::move(gen));
  }
  return g;
}

}  // namespace leech
