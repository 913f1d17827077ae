// Exact integer and rational linear algebra over GMP.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace leech {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Thrown when a mathematical invariant fails. `module` and `check` name the
/// failing step so reports can point at it.
class InvariantError : public std::runtime_error {
 public:
  InvariantError(std::string module, std::string check, const std::string& detail);

  const std::string& module() const { return module_; }
  const std::string& check() const { return check_; }

 private:
  std::string module_;
  std::string check_;
};

/// Dense row-major matrix. Entries are exact (Int or Rat).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  std::vector<T> col_vector(std::size_t j) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row(dst) += factor * row(src)
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor);
  void negate_row(std::size_t i);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x);
/// Row vector times matrix.
template <class T>
std::vector<T> operator*(const std::vector<T>& x, const Matrix<T>& a);

template <class T>
T dot(std::span<const T> a, std::span<const T> b);
template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  return dot(std::span<const T>(a), std::span<const T>(b));
}
/// x^T G y
template <class T>
T bilinear(const std::vector<T>& x, const Matrix<T>& g, const std::vector<T>& y);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
bool is_integral(const RatMatrix& m);
bool is_integral(const RatVector& v);
bool is_integral(const Rat& x);
/// Throws InvariantError("core-algebra", what, ...) on non-integral input.
IntMatrix to_integer(const RatMatrix& m, const std::string& what = "integrality");
IntVector to_integer(const RatVector& v, const std::string& what = "integrality");
Int to_integer(const Rat& x, const std::string& what = "integrality");

Int floor_div(const Int& a, const Int& b);
Int floor(const Rat& x);
Int round_half_up(const Rat& x);
Int gcd_of(std::span<const Int> v);
/// Least common multiple of all denominators.
Int common_denominator(const RatMatrix& m);
Int common_denominator(const RatVector& v);

Int determinant(const IntMatrix& m);
Rat determinant(const RatMatrix& m);
/// Throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);
/// Solves A x = b for square nonsingular A.
RatVector solve(const RatMatrix& a, const RatVector& b);
/// True when every leading principal pivot of the symmetric matrix is positive.
bool is_positive_definite(const IntMatrix& gram);
bool is_symmetric(const IntMatrix& m);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

std::string to_string(const Rat& x);
std::string to_string(const Int& x);
/// Parses "-3", "1/2". Throws std::invalid_argument on malformed text.
Rat parse_rational(const std::string& text);
Int parse_integer(const std::string& text);

// ---- template definitions ----

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::col_vector(std::size_t j) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template <class T>
void Matrix<T>::add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

template <class T>
void Matrix<T>::add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

template <class T>
void Matrix<T>::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

template <class T>
std::vector<T> operator*(const std::vector<T>& x, const Matrix<T>& a) {
  if (a.rows() != x.size()) throw std::invalid_argument("vector-matrix dimension mismatch");
  std::vector<T> y(a.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a(i, j);
  }
  return y;
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T bilinear(const std::vector<T>& x, const Matrix<T>& g, const std::vector<T>& y) {
  return dot(x, g * y);
}

}  // namespace leech
