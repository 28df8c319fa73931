#pragma once

#include <optional>

#include "povmkit/povm.hpp"

namespace povmkit {

/// A partition of a POVM's outcome indices with the merged class effects.
/// Classes are listed by smallest member, members ascending.
struct OutcomePartition {
  std::vector<std::vector<int>> classes;
  std::vector<ComplexMatrix> class_effects;  ///< M([x]) = sum over the class
  /// Weight p with M([x]) = p |d><d| when the class effect is rank-1.
  std::vector<std::optional<double>> class_weights;

  int class_of(int outcome) const;
};

/// Build a partition from explicit classes; throws BadPartition unless the
/// classes are disjoint, nonempty and cover every outcome index.
OutcomePartition partition_from_classes(const DiscretePOVM& m,
                                        std::vector<std::vector<int>> classes,
                                        const Tolerances& tol = {});

/// The proportionality quotient of a rank-1 POVM: outcomes i ~ j when
/// M_i = p M_j for some p > 0, detected through Cauchy-Schwarz equality of
/// tr[M_i M_j]. Union-find closure with an all-pairs post check; throws
/// Error when numerically intransitive chains appear, NotRankOne otherwise.
OutcomePartition equivalence_classes(const DiscretePOVM& m, const Tolerances& tol = {});

/// The relabeling of M along a partition: one outcome per class with the
/// summed effect, labels joined with '+'.
DiscretePOVM relabel(const DiscretePOVM& m, const OutcomePartition& p,
                     const Tolerances& tol = {});

}  // namespace povmkit
