#pragma once

// Shared test utilities: deterministic random matrices, POVMs and kernels.
// Everything seeds from std::mt19937_64 so failures reproduce exactly.

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "povmkit/complex_matrix.hpp"
#include "povmkit/eig.hpp"

namespace povmkit::testing {

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  double gauss() { return normal_(gen_); }
  double uniform() { return uni_(gen_); }
  int uniform_int(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  Complex cgauss() { return Complex(gauss(), gauss()); }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uni_{0.0, 1.0};
};

inline ComplexMatrix random_matrix(Rng& rng, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.cgauss();
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, int d) {
  return random_matrix(rng, d, d).hermitized();
}

// Columns of the eigenvector matrix of a random Hermitian matrix; orthonormal
// by construction.
inline ComplexMatrix random_unitary(Rng& rng, int d) {
  return eig_hermitian(random_hermitian(rng, d)).eigenvectors;
}

// Inverse square root of a positive definite Hermitian matrix.
inline ComplexMatrix inv_sqrt(const ComplexMatrix& s) {
  const HermitianEig e = eig_hermitian(s);
  const int d = s.dim();
  ComplexMatrix r(d, d);
  for (int k = 0; k < d; ++k) {
    const CVector u = e.eigenvectors.column(k);
    const ComplexMatrix p = ComplexMatrix::outer(u, u);
    const double w = 1.0 / std::sqrt(e.eigenvalues[k]);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r(i, j) += w * p(i, j);
  }
  return r;
}

// Effects M_i = S^{-1/2} W_i S^{-1/2} with W_i Wishart blocks of the given
// ranks; sums to the identity exactly up to roundoff.
inline std::vector<ComplexMatrix> random_effects(Rng& rng, int d,
                                                 const std::vector<int>& ranks) {
  std::vector<ComplexMatrix> w;
  ComplexMatrix s(d, d);
  for (int r : ranks) {
    const ComplexMatrix g = random_matrix(rng, d, r);
    const ComplexMatrix wi = g * g.adjoint();
    s += wi;
    w.push_back(wi);
  }
  const ComplexMatrix si = inv_sqrt(s);
  std::vector<ComplexMatrix> effects;
  effects.reserve(w.size());
  for (const auto& wi : w) effects.push_back((si * wi * si).hermitized());
  return effects;
}

inline std::vector<int> random_ranks(Rng& rng, int d, int n) {
  // resample until the Wishart sum is full rank
  while (true) {
    std::vector<int> ranks(n);
    int total = 0;
    for (int& r : ranks) {
      r = rng.uniform_int(1, d);
      total += r;
    }
    if (total >= d) return ranks;
  }
}

inline std::vector<ComplexMatrix> random_povm_effects(Rng& rng, int d, int n) {
  return random_effects(rng, d, random_ranks(rng, d, n));
}

inline std::vector<ComplexMatrix> random_rank1_effects(Rng& rng, int d, int n) {
  return random_effects(rng, d, std::vector<int>(n, 1));
}

// PVM effects from grouped columns of a random unitary.
inline std::vector<ComplexMatrix> random_pvm_effects(Rng& rng, int d, int n_groups) {
  const ComplexMatrix u = random_unitary(rng, d);
  std::vector<int> group(d);
  for (int k = 0; k < d; ++k) group[k] = k % n_groups;
  // shuffle-ish assignment, deterministic given the rng stream
  for (int k = d - 1; k > 0; --k) std::swap(group[k], group[rng.uniform_int(0, k)]);
  std::vector<ComplexMatrix> effects(n_groups, ComplexMatrix(d, d));
  for (int k = 0; k < d; ++k) {
    const CVector col = u.column(k);
    effects[group[k]] += ComplexMatrix::outer(col, col);
  }
  return effects;
}

// ---------------------------------------------------------------------------
// Hand-built paper fixtures. These deliberately duplicate the library's
// fixture module so tests check it against an independent construction.

inline CVector basis_vec(int d, int j) {
  CVector e(d);
  e[j] = 1.0;
  return e;
}

inline ComplexMatrix projector(const CVector& v) { return ComplexMatrix::outer(v, v); }

// U_k |d><d| U_k^* with U_k = diag(1, i^k) and |d> = (1, 1)/2.
inline std::vector<ComplexMatrix> example4_effects() {
  const Complex i{0.0, 1.0};
  std::vector<ComplexMatrix> effects;
  for (int k = 1; k <= 4; ++k) {
    const Complex ik = std::pow(i, k);
    effects.push_back(projector({0.5, 0.5 * ik}));
  }
  return effects;
}

// Six rank-1 effects: halved standard-basis projectors plus halved projectors
// onto the Fourier-phase basis psi_k.
inline std::vector<ComplexMatrix> example5_m_effects() {
  const Complex alpha = std::exp(Complex(0.0, 2.0 * M_PI / 3.0));
  const double r3 = 1.0 / std::sqrt(3.0);
  std::vector<CVector> dirs{basis_vec(3, 0), basis_vec(3, 1), basis_vec(3, 2),
                            {r3, r3, r3},
                            {r3, r3 * alpha, r3 * alpha * alpha},
                            {r3, r3 * alpha * alpha, r3 * alpha}};
  std::vector<ComplexMatrix> effects;
  for (const auto& v : dirs) {
    ComplexMatrix m = projector(v);
    m *= 0.5;
    effects.push_back(m);
  }
  return effects;
}

// Three rank-2 effects (1/2)(I - |j><j|).
inline std::vector<ComplexMatrix> example5_mprime_effects() {
  std::vector<ComplexMatrix> effects;
  for (int j = 0; j < 3; ++j) {
    ComplexMatrix m = ComplexMatrix::identity(3) - projector(basis_vec(3, j));
    m *= 0.5;
    effects.push_back(m);
  }
  return effects;
}

// (|0><0|, 0.1 |1><1|, 0.9 |1><1|).
inline std::vector<ComplexMatrix> remark4_effects() {
  const ComplexMatrix p0 = projector(basis_vec(2, 0));
  const ComplexMatrix p1 = projector(basis_vec(2, 1));
  ComplexMatrix a = p1, b = p1;
  a *= 0.1;
  b *= 0.9;
  return {p0, a, b};
}

inline std::vector<ComplexMatrix> qubit_z_effects() {
  return {projector(basis_vec(2, 0)), projector(basis_vec(2, 1))};
}

inline std::vector<ComplexMatrix> qubit_x_effects() {
  const double s = 1.0 / std::sqrt(2.0);
  return {projector({s, s}), projector({s, -s})};
}

// (2/3)|v_k><v_k| with real qubit directions 60 degrees apart in Hilbert
// space (120 degrees on the Bloch sphere).
inline std::vector<ComplexMatrix> trine_effects() {
  std::vector<ComplexMatrix> effects;
  for (int k = 0; k < 3; ++k) {
    const double theta = k * M_PI / 3.0;
    ComplexMatrix m = projector({std::cos(theta), std::sin(theta)});
    m *= 2.0 / 3.0;
    effects.push_back(m);
  }
  return effects;
}

// Row-stochastic matrix with strictly positive entries (no zero columns).
inline std::vector<std::vector<double>> random_stochastic(Rng& rng, int rows, int cols) {
  std::vector<std::vector<double>> p(rows, std::vector<double>(cols));
  for (auto& row : p) {
    double sum = 0.0;
    for (double& x : row) {
      x = 0.05 + rng.uniform();
      sum += x;
    }
    for (double& x : row) x /= sum;
  }
  return p;
}

}  // namespace povmkit::testing
