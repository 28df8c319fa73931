#pragma once

#include <string>
#include <vector>

#include "povmkit/eig.hpp"

namespace povmkit {

/// One violated POVM invariant found during validation.
struct PovmIssue {
  enum class Kind {
    Empty,
    DimMismatch,
    NotHermitian,
    NotPsd,
    ZeroEffect,
    NotComplete,
    DuplicateLabel,
  };
  Kind kind;
  int index = -1;     ///< offending effect / label index, -1 when global
  double value = 0.0; ///< min eigenvalue (NotPsd) or residual (NotComplete)
  std::string message;
};

struct PovmDiagnostics {
  bool valid = false;
  std::vector<PovmIssue> issues;
  double completeness_residual = 0.0;  ///< max-norm of (sum of effects - I)

  std::string summary() const;
};

class PovmValidationError : public Error {
 public:
  PovmValidationError(PovmDiagnostics diag, const std::string& what)
      : Error(what), diagnostics(std::move(diag)) {}
  PovmDiagnostics diagnostics;
};

/// A discrete POVM: effects M_1..M_N on C^d with every effect Hermitian, PSD
/// and nonzero, summing to the identity. Immutable after construction.
class DiscretePOVM {
 public:
  /// Collects every violated invariant without throwing.
  static PovmDiagnostics check(int dim, const std::vector<ComplexMatrix>& effects,
                               const std::vector<std::string>& labels = {},
                               const Tolerances& tol = {});

  /// Throws PovmValidationError carrying the full diagnostic when invalid.
  /// Labels default to x1..xN.
  DiscretePOVM(int dim, std::vector<ComplexMatrix> effects,
               std::vector<std::string> labels = {}, const Tolerances& tol = {});

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(effects_.size()); }
  const ComplexMatrix& effect(int i) const { return effects_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// M(X) for the subset encoded as a bitmask over outcome indices.
  ComplexMatrix subset_effect(uint32_t mask) const;

 private:
  int dim_;
  std::vector<ComplexMatrix> effects_;
  std::vector<std::string> labels_;
};

/// Rank-revealing decomposition of one effect: M_i = sum_k |v_k><v_k| with
/// v_k = sqrt(lambda_k) phi_k, eigenvalues ascending, only those above the
/// relative rank cutoff kept.
struct EffectDecomposition {
  int multiplicity;                 ///< m_i
  std::vector<double> eigenvalues;  ///< kept lambda_ik, ascending
  std::vector<CVector> vectors;     ///< d_ik, same order
};

EffectDecomposition effect_decomposition(const DiscretePOVM& m, int i,
                                         const Tolerances& tol = {});

/// Multiplicity m_i of outcome i (matrix rank of the effect).
int effect_rank(const DiscretePOVM& m, int i, const Tolerances& tol = {});

/// true iff every effect has rank 1.
bool is_rank_one(const DiscretePOVM& m, const Tolerances& tol = {});

/// true iff every effect is an orthogonal projection (M_i^2 = M_i); for a
/// discrete POVM this makes every range element a projection.
bool is_pvm(const DiscretePOVM& m, const Tolerances& tol = {});

/// Regularity: no proper range element M(X) (0 != M(X) != I) sits below or
/// above I/2 in the Loewner order. Enumerates 2^N subsets; throws
/// TooManyOutcomes beyond the range cap.
bool is_regular(const DiscretePOVM& m, const Tolerances& tol = {});

}  // namespace povmkit
