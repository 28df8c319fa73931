#pragma once

#include <optional>

#include "povmkit/povm.hpp"

namespace povmkit {

/// Minimal Naimark dilation of a discrete POVM: an isometry J from C^d into
/// the direct sum of per-outcome fibers C^{m_i}, with coordinate projections
/// P_i onto the fibers satisfying J^dagger P_i J = M_i. Blocks are ordered
/// outcome-major, eigenvalue-ascending inside an outcome.
struct NaimarkDilation {
  DiscretePOVM source;
  int total_dim;                   ///< sum of multiplicities
  std::vector<int> multiplicity;   ///< m_i per outcome
  std::vector<int> block_offset;   ///< size N+1; block i spans rows [off[i], off[i+1])
  ComplexMatrix isometry;          ///< J, total_dim x d

  /// A_i = P_i J restricted to the fiber: the m_i x d row block of J.
  ComplexMatrix block(int i) const;
  /// true iff J is square and JJ^dagger = I as well (dilation space = C^d).
  bool isometry_unitary(double tol) const;
};

NaimarkDilation naimark_dilate(const DiscretePOVM& m, const Tolerances& tol = {});

/// Structure vectors psi_n = J h_n for an orthonormal basis {h_n}; their
/// per-outcome Gram blocks reproduce the matrix elements <h_n|M_i h_m>.
struct StructureVectors {
  ComplexMatrix basis;           ///< d x d, column n = h_n
  ComplexMatrix vectors;         ///< total_dim x d, column n = psi_n
  std::vector<int> block_offset;

  /// G^i with G^i(n, m) = <psi_n(x_i) | psi_m(x_i)>.
  ComplexMatrix gram_block(int i) const;
  int outcome_count() const { return static_cast<int>(block_offset.size()) - 1; }
};

/// Basis defaults to the standard basis; throws BasisNotOrthonormal when the
/// supplied columns fail h^dagger h = I at tol.eig.
StructureVectors structure_vectors(const NaimarkDilation& d,
                                   const std::optional<ComplexMatrix>& basis = {},
                                   const Tolerances& tol = {});

/// Sub-effect decomposition: given effects E_i <= M_i, the unique
/// decomposable 0 <= E <= I on the dilation space with A_i^dagger E(x_i) A_i = E_i.
/// Returns the fiber blocks E(x_i), computed through the pseudoinverse of A_i.
/// Throws NotBelowBound(i) when E_i <= M_i fails.
std::vector<ComplexMatrix> below_bound_decompose(const DiscretePOVM& m,
                                                 const NaimarkDilation& d,
                                                 const std::vector<ComplexMatrix>& sub_effects,
                                                 const Tolerances& tol = {});

}  // namespace povmkit
