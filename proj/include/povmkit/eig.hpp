#pragma once

#include <vector>

#include "povmkit/complex_matrix.hpp"

namespace povmkit {

/// Spectral decomposition of a Hermitian matrix. Eigenvalues ascending;
/// eigenvector columns orthonormal, each with its largest-magnitude component
/// rotated real and positive so golden tests see one canonical answer.
struct HermitianEig {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;  // column n pairs with eigenvalues[n]

  ComplexMatrix reconstruct() const;
};

/// true iff max |A - A^dagger| entrywise <= tol.
bool hermitize_check(const ComplexMatrix& a, double tol);

/// Cyclic complex Jacobi diagonalization. Throws NonHermitian when the input
/// fails hermitize_check at tol.eig.
HermitianEig eig_hermitian(const ComplexMatrix& a, const Tolerances& tol = {});

/// min eigenvalue >= -tol. Throws NonHermitian on non-Hermitian input.
bool is_psd(const ComplexMatrix& a, double tol = Tolerances{}.psd);

/// Loewner order: B - A positive semidefinite within tol.
bool loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b,
                 double tol = Tolerances{}.psd);

/// Isometric real coordinates of a Hermitian d x d matrix: the d diagonal
/// entries, then sqrt(2)-scaled real and imaginary parts of the strict upper
/// triangle (d^2 reals total). <vec(A), vec(B)> = tr[AB].
std::vector<double> real_vectorize(const ComplexMatrix& hermitian);

/// Dimension of the real span of a family of Hermitian matrices inside the
/// d^2-dimensional real space of Hermitian matrices. Numerical rank with
/// singular-value cutoff tol * sigma_max.
int hermitian_family_rank(const std::vector<ComplexMatrix>& family,
                          double tol = Tolerances{}.rank);

/// Singular values of a complex matrix, descending (via the Gram matrix of
/// the smaller side).
std::vector<double> singular_values(const ComplexMatrix& a, const Tolerances& tol = {});

/// Numerical rank with relative singular-value cutoff.
int matrix_rank(const ComplexMatrix& a, double rel_cutoff = Tolerances{}.rank);

/// Moore-Penrose pseudoinverse; singular values below rel_cutoff * sigma_max
/// are treated as zero.
ComplexMatrix pseudoinverse(const ComplexMatrix& a,
                            double rel_cutoff = Tolerances{}.pinv);

}  // namespace povmkit
