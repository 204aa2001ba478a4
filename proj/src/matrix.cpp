#include "hooksph/matrix.hpp"

#include <utility>

namespace hooksph {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& av = a(r, k);
      if (av.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Rational& bv = b(k, c);
        if (!bv.is_zero()) out(r, c) += av * bv;
      }
    }
  return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& v = (*this)(r, c);
      if (!v.is_zero()) y[r] += v * x[c];
    }
  }
  return y;
}

namespace {

// Row-reduces [a | b] in place; returns the rank of a. Pivot columns recorded.
std::size_t eliminate(Matrix& a, Matrix& b, std::vector<std::size_t>* pivots, Rational* det) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  if (det) *det = Rational(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) {
      if (det) *det = Rational(0);
      continue;
    }
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(rank, k));
      for (std::size_t k = 0; k < b.cols(); ++k) std::swap(b(pivot, k), b(rank, k));
      if (det) *det = -*det;
    }
    const Rational inv = inverse(a(rank, c));
    if (det) *det *= a(rank, c);
    for (std::size_t k = 0; k < cols; ++k) a(rank, k) *= inv;
    for (std::size_t k = 0; k < b.cols(); ++k) b(rank, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < cols; ++k)
        if (!a(rank, k).is_zero()) a(r, k) -= f * a(rank, k);
      for (std::size_t k = 0; k < b.cols(); ++k)
        if (!b(rank, k).is_zero()) b(r, k) -= f * b(rank, k);
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  if (det && rank < cols) *det = Rational(0);
  return rank;
}

}  // namespace

Matrix solve(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix lhs = a;
  Matrix rhs = b;
  if (eliminate(lhs, rhs, nullptr, nullptr) < a.rows()) throw SingularMatrixError("singular matrix in exact solve");
  return rhs;
}

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows())); }

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix lhs = a;
  Matrix rhs(a.rows(), 0);
  Rational det;
  eliminate(lhs, rhs, nullptr, &det);
  return det;
}

std::size_t rank(const Matrix& a) {
  Matrix lhs = a;
  Matrix rhs(a.rows(), 0);
  return eliminate(lhs, rhs, nullptr, nullptr);
}

}  // namespace hooksph
