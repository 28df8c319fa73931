#include "povmkit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace povmkit {

ComplexMatrix HermitianEig::reconstruct() const {
  const int n = eigenvectors.rows();
  ComplexMatrix scaled = eigenvectors;
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) scaled(r, c) *= eigenvalues[c];
  return scaled * eigenvectors.adjoint();
}

bool hermitize_check(const ComplexMatrix& a, double tol) {
  if (!a.square()) throw DimMismatch("hermitize_check needs a square matrix");
  return max_abs_diff(a, a.adjoint()) <= tol;
}

namespace {

// One Jacobi rotation in the (p, q) plane, zeroing W(p, q). W stays Hermitian,
// V accumulates the product of rotations (columns end up as eigenvectors).
void jacobi_rotate(ComplexMatrix& w, ComplexMatrix& v, int p, int q) {
  const Complex apq = w(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;
  const Complex u = apq / b;  // e^{i arg(apq)}
  const double app = w(p, p).real();
  const double aqq = w(q, q).real();
  const double tau = (aqq - app) / (2.0 * b);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex gpq = s * u;         // G(p,q)
  const Complex gqp = -s * std::conj(u);  // G(q,p)

  const int n = w.rows();
  // W <- W G (columns p, q)
  for (int r = 0; r < n; ++r) {
    const Complex wrp = w(r, p), wrq = w(r, q);
    w(r, p) = wrp * c + wrq * gqp;
    w(r, q) = wrp * gpq + wrq * c;
  }
  // W <- G^dagger W (rows p, q)
  for (int col = 0; col < n; ++col) {
    const Complex wpc = w(p, col), wqc = w(q, col);
    w(p, col) = c * wpc + std::conj(gqp) * wqc;
    w(q, col) = std::conj(gpq) * wpc + c * wqc;
  }
  // Exact zeros and real diagonal where the rotation guarantees them.
  w(p, q) = 0.0;
  w(q, p) = 0.0;
  w(p, p) = Complex(w(p, p).real(), 0.0);
  w(q, q) = Complex(w(q, q).real(), 0.0);
  // V <- V G
  for (int r = 0; r < n; ++r) {
    const Complex vrp = v(r, p), vrq = v(r, q);
    v(r, p) = vrp * c + vrq * gqp;
    v(r, q) = vrp * gpq + vrq * c;
  }
}

double off_diagonal_sq(const ComplexMatrix& w) {
  double s = 0.0;
  const int n = w.rows();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += std::norm(w(p, q));
  return s;
}

// Canonical phase: largest-magnitude component of each column real positive.
void fix_column_phases(ComplexMatrix& v) {
  const int n = v.rows();
  for (int c = 0; c < v.cols(); ++c) {
    int best = 0;
    double best_mag = -1.0;
    for (int r = 0; r < n; ++r) {
      const double m = std::abs(v(r, c));
      if (m > best_mag) {
        best_mag = m;
        best = r;
      }
    }
    if (best_mag <= 0.0) continue;
    const Complex phase = std::conj(v(best, c)) / best_mag;
    for (int r = 0; r < n; ++r) v(r, c) *= phase;
    v(best, c) = Complex(std::abs(v(best, c)), 0.0);
  }
}

}  // namespace

HermitianEig eig_hermitian(const ComplexMatrix& a, const Tolerances& tol) {
  if (!a.square()) throw DimMismatch("eig_hermitian needs a square matrix");
  if (!hermitize_check(a, tol.eig)) throw NonHermitian("eig_hermitian: input is not Hermitian");

  const int n = a.rows();
  ComplexMatrix w = a.hermitized();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(w.frobenius_norm(), std::numeric_limits<double>::min());
  const double target = 1e-30 * scale * scale;  // off-diagonal Frobenius^2 target
  constexpr int kMaxSweeps = 100;
  double prev_off = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_sq(w);
    if (off <= target || off >= prev_off) break;
    prev_off = off;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(w, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return w(i, i).real() < w(j, j).real(); });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int c = 0; c < n; ++c) {
    out.eigenvalues[c] = w(order[c], order[c]).real();
    for (int r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
  }
  fix_column_phases(out.eigenvectors);
  return out;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  const HermitianEig e = eig_hermitian(a);
  return e.eigenvalues.empty() || e.eigenvalues.front() >= -tol;
}

bool loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (!a.same_shape(b)) throw DimMismatch("loewner_leq shape mismatch");
  return is_psd(b - a, tol);
}

std::vector<double> real_vectorize(const ComplexMatrix& h) {
  const int n = h.dim();
  static constexpr double kSqrt2 = 1.4142135623730951;
  std::vector<double> v;
  v.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) v.push_back(h(i, i).real());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      v.push_back(kSqrt2 * h(i, j).real());
      v.push_back(kSqrt2 * h(i, j).imag());
    }
  return v;
}

namespace {

// Jordan-Wielandt embedding [[0, A], [A^dagger, 0]]. Its spectrum is
// {+sigma_i, -sigma_i, 0...}, so singular values come out with absolute
// accuracy ~eps * sigma_max instead of the sqrt(eps) floor a Gram matrix
// would give.
ComplexMatrix augmented(const ComplexMatrix& a) {
  const int m = a.rows(), n = a.cols();
  ComplexMatrix h(m + n, m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      h(i, m + j) = a(i, j);
      h(m + j, i) = std::conj(a(i, j));
    }
  return h;
}

}  // namespace

int hermitian_family_rank(const std::vector<ComplexMatrix>& family, double tol) {
  if (family.empty()) return 0;
  const int d = family.front().dim();
  ComplexMatrix rows(static_cast<int>(family.size()), d * d);
  for (size_t i = 0; i < family.size(); ++i) {
    const auto& m = family[i];
    if (!m.square() || m.dim() != d) throw DimMismatch("hermitian_family_rank: mixed dimensions");
    if (!hermitize_check(m, Tolerances{}.eig))
      throw NonHermitian("hermitian_family_rank: non-Hermitian member");
    const std::vector<double> v = real_vectorize(m);
    for (int c = 0; c < d * d; ++c) rows(static_cast<int>(i), c) = v[c];
  }
  return matrix_rank(rows, tol);
}

std::vector<double> singular_values(const ComplexMatrix& a, const Tolerances& tol) {
  const int k = std::min(a.rows(), a.cols());
  const HermitianEig e = eig_hermitian(augmented(a), tol);
  const int total = a.rows() + a.cols();
  std::vector<double> sv(k);
  for (int i = 0; i < k; ++i) sv[i] = std::max(e.eigenvalues[total - 1 - i], 0.0);
  return sv;  // descending
}

int matrix_rank(const ComplexMatrix& a, double rel_cutoff) {
  const std::vector<double> sv = singular_values(a);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cutoff = rel_cutoff * sv.front();
  int rank = 0;
  for (double s : sv)
    if (s > cutoff) ++rank;
  return rank;
}

ComplexMatrix pseudoinverse(const ComplexMatrix& a, double rel_cutoff) {
  const int m = a.rows(), n = a.cols();
  const HermitianEig e = eig_hermitian(augmented(a));
  const double smax = std::max(e.eigenvalues.back(), 0.0);
  const double cutoff = rel_cutoff * smax;
  ComplexMatrix pinv(n, m);
  if (smax == 0.0) return pinv;
  // Positive eigenpairs: w = (u, v)/sqrt(2) with A v = sigma u, so
  // A = sum sigma |u><v| and A^+ = sum (1/sigma) |v><u| = sum (2/sigma)|q><p|.
  for (int k = m + n - 1; k >= 0; --k) {
    const double sigma = e.eigenvalues[k];
    if (sigma <= cutoff) break;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c)
        pinv(r, c) += 2.0 / sigma * e.eigenvectors(m + r, k) * std::conj(e.eigenvectors(c, k));
  }
  return pinv;
}

}  // namespace povmkit
