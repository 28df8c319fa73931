#include "povmkit/complex_matrix.hpp"

#include <cmath>

namespace povmkit {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw DimMismatch("matrix dimensions must be nonnegative");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::outer(const CVector& u, const CVector& v) {
  ComplexMatrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (size_t r = 0; r < u.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c)
      m(static_cast<int>(r), static_cast<int>(c)) = u[r] * std::conj(v[c]);
  return m;
}

int ComplexMatrix::dim() const {
  if (!square()) throw DimMismatch("matrix is not square");
  return rows_;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  ComplexMatrix r = *this;
  r += o;
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  ComplexMatrix r = *this;
  r -= o;
  return r;
}

ComplexMatrix ComplexMatrix::operator-() const {
  ComplexMatrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (!same_shape(o)) throw DimMismatch("matrix addition shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (!same_shape(o)) throw DimMismatch("matrix subtraction shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& x : a_) x *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (cols_ != o.rows_) throw DimMismatch("matrix product shape mismatch");
  ComplexMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  }
  return r;
}

CVector ComplexMatrix::operator*(const CVector& v) const {
  if (cols_ != static_cast<int>(v.size())) throw DimMismatch("matrix-vector shape mismatch");
  CVector r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Complex s{};
    for (int k = 0; k < cols_; ++k) s += (*this)(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::hermitized() const {
  if (!square()) throw DimMismatch("hermitized() needs a square matrix");
  ComplexMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex s{};
  for (int i = 0; i < dim(); ++i) s += (*this)(i, i);
  return s;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

CVector ComplexMatrix::column(int c) const {
  CVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  ComplexMatrix r = m;
  r *= s;
  return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& m) { return Complex(s, 0.0) * m; }

Complex inner(const CVector& u, const CVector& v) {
  if (u.size() != v.size()) throw DimMismatch("inner product length mismatch");
  Complex s{};
  for (size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(const CVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) throw DimMismatch("max_abs_diff shape mismatch");
  return (a - b).max_abs();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

}  // namespace povmkit
