#include "povmkit/dilation.hpp"

#include <cmath>

namespace povmkit {

ComplexMatrix NaimarkDilation::block(int i) const {
  const int d = source.dim();
  const int m_i = multiplicity[i];
  ComplexMatrix a(m_i, d);
  for (int r = 0; r < m_i; ++r)
    for (int c = 0; c < d; ++c) a(r, c) = isometry(block_offset[i] + r, c);
  return a;
}

bool NaimarkDilation::isometry_unitary(double tol) const {
  if (total_dim != source.dim()) return false;
  const ComplexMatrix jjd = isometry * isometry.adjoint();
  return max_abs_diff(jjd, ComplexMatrix::identity(total_dim)) <= tol;
}

NaimarkDilation naimark_dilate(const DiscretePOVM& m, const Tolerances& tol) {
  const int n = m.size();
  const int d = m.dim();

  std::vector<EffectDecomposition> decs;
  decs.reserve(n);
  NaimarkDilation out{m, 0, {}, {0}, {}};
  for (int i = 0; i < n; ++i) {
    decs.push_back(effect_decomposition(m, i, tol));
    out.multiplicity.push_back(decs.back().multiplicity);
    out.total_dim += decs.back().multiplicity;
    out.block_offset.push_back(out.total_dim);
  }

  // J = sum_{i,k} |e_ik><d_ik|: row (i,k) holds the conjugate of d_ik.
  out.isometry = ComplexMatrix(out.total_dim, d);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < decs[i].multiplicity; ++k) {
      const int row = out.block_offset[i] + k;
      for (int c = 0; c < d; ++c) out.isometry(row, c) = std::conj(decs[i].vectors[k][c]);
    }
  return out;
}

ComplexMatrix StructureVectors::gram_block(int i) const {
  const int d = basis.cols();
  const int lo = block_offset[i], hi = block_offset[i + 1];
  ComplexMatrix g(d, d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m) {
      Complex s{};
      for (int r = lo; r < hi; ++r) s += std::conj(vectors(r, n)) * vectors(r, m);
      g(n, m) = s;
    }
  return g;
}

StructureVectors structure_vectors(const NaimarkDilation& d,
                                   const std::optional<ComplexMatrix>& basis,
                                   const Tolerances& tol) {
  const int dim = d.source.dim();
  ComplexMatrix h = basis.value_or(ComplexMatrix::identity(dim));
  if (h.rows() != dim || h.cols() != dim)
    throw BasisNotOrthonormal("basis must hold d columns of length d");
  if (max_abs_diff(h.adjoint() * h, ComplexMatrix::identity(dim)) > tol.eig)
    throw BasisNotOrthonormal("basis columns are not orthonormal");

  StructureVectors sv;
  sv.basis = std::move(h);
  sv.vectors = d.isometry * sv.basis;
  sv.block_offset = d.block_offset;
  return sv;
}

std::vector<ComplexMatrix> below_bound_decompose(const DiscretePOVM& m,
                                                 const NaimarkDilation& d,
                                                 const std::vector<ComplexMatrix>& sub_effects,
                                                 const Tolerances& tol) {
  const int n = m.size();
  if (static_cast<int>(sub_effects.size()) != n)
    throw DimMismatch("sub-effect count does not match outcome count");

  std::vector<ComplexMatrix> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto& e = sub_effects[i];
    if (!e.square() || e.dim() != m.dim())
      throw DimMismatch("sub-effect dimension mismatch");
    if (!hermitize_check(e, tol.eig))
      throw NonHermitian("sub-effect is not Hermitian");
    if (!is_psd(e, tol.psd) || !loewner_leq(e, m.effect(i), tol.psd))
      throw NotBelowBound(i, "sub-effect " + std::to_string(i) + " violates 0 <= E_i <= M_i");

    const ComplexMatrix a = d.block(i);
    const ComplexMatrix apinv = pseudoinverse(a, tol.pinv);
    // E(x_i) = (A_i^+)^dagger E_i A_i^+, the unique fiber block by minimality
    blocks.push_back((apinv.adjoint() * e * apinv).hermitized());
  }
  return blocks;
}

}  // namespace povmkit
