#pragma once

#include <vector>

#include "povmkit/types.hpp"

namespace povmkit {

using CVector = std::vector<Complex>;

/// Dense complex matrix, row-major storage. The working range of the library
/// is small (dimensions up to a few tens), so there is no blocking, sparsity
/// or external BLAS; everything is a plain loop.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int rows, int cols);
  /// |u><v|
  static ComplexMatrix outer(const CVector& u, const CVector& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  /// Side length of a square matrix.
  int dim() const;

  Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator-() const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  CVector operator*(const CVector& v) const;
  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  ComplexMatrix adjoint() const;
  /// (A + A^dagger)/2; requires square.
  ComplexMatrix hermitized() const;
  Complex trace() const;
  /// Entrywise max modulus (the max-norm used throughout the spec).
  double max_abs() const;
  double frobenius_norm() const;
  /// Column c as a vector.
  CVector column(int c) const;

  bool same_shape(const ComplexMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexMatrix operator*(double s, const ComplexMatrix& m);

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const CVector& u, const CVector& v);
double norm(const CVector& v);

/// max |A - B| entrywise; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Commutator AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace povmkit
