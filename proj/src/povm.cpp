#include "povmkit/povm.hpp"

#include <set>
#include <sstream>

namespace povmkit {

namespace {

std::string issue_text(const PovmIssue& i) {
  std::ostringstream os;
  switch (i.kind) {
    case PovmIssue::Kind::Empty:
      os << "effect list is empty";
      break;
    case PovmIssue::Kind::DimMismatch:
      os << "effect " << i.index << " has wrong shape";
      break;
    case PovmIssue::Kind::NotHermitian:
      os << "effect " << i.index << " is not Hermitian";
      break;
    case PovmIssue::Kind::NotPsd:
      os << "effect " << i.index << " is not PSD (min eigenvalue " << i.value << ")";
      break;
    case PovmIssue::Kind::ZeroEffect:
      os << "effect " << i.index << " is zero";
      break;
    case PovmIssue::Kind::NotComplete:
      os << "effects do not sum to identity (residual " << i.value << ")";
      break;
    case PovmIssue::Kind::DuplicateLabel:
      os << "duplicate outcome label at index " << i.index;
      break;
  }
  return os.str();
}

}  // namespace

std::string PovmDiagnostics::summary() const {
  if (valid) return "valid";
  std::ostringstream os;
  for (size_t k = 0; k < issues.size(); ++k) {
    if (k) os << "; ";
    os << issues[k].message;
  }
  return os.str();
}

PovmDiagnostics DiscretePOVM::check(int dim, const std::vector<ComplexMatrix>& effects,
                                    const std::vector<std::string>& labels,
                                    const Tolerances& tol) {
  PovmDiagnostics d;
  auto add = [&d](PovmIssue i) {
    i.message = issue_text(i);
    d.issues.push_back(std::move(i));
  };

  if (effects.empty()) {
    add({PovmIssue::Kind::Empty, -1, 0.0, {}});
    return d;
  }
  ComplexMatrix sum(dim, dim);
  bool shapes_ok = true;
  for (size_t i = 0; i < effects.size(); ++i) {
    const int idx = static_cast<int>(i);
    const auto& e = effects[i];
    if (e.rows() != dim || e.cols() != dim) {
      add({PovmIssue::Kind::DimMismatch, idx, 0.0, {}});
      shapes_ok = false;
      continue;
    }
    if (!hermitize_check(e, tol.eig)) {
      add({PovmIssue::Kind::NotHermitian, idx, 0.0, {}});
      continue;
    }
    const HermitianEig eig = eig_hermitian(e, tol);
    if (eig.eigenvalues.front() < -tol.psd)
      add({PovmIssue::Kind::NotPsd, idx, eig.eigenvalues.front(), {}});
    if (e.max_abs() <= tol.psd) add({PovmIssue::Kind::ZeroEffect, idx, 0.0, {}});
    sum += e;
  }
  if (shapes_ok) {
    d.completeness_residual = max_abs_diff(sum, ComplexMatrix::identity(dim));
    if (d.completeness_residual > tol.validate)
      add({PovmIssue::Kind::NotComplete, -1, d.completeness_residual, {}});
  }
  if (!labels.empty()) {
    std::set<std::string> seen;
    for (size_t i = 0; i < labels.size(); ++i)
      if (!seen.insert(labels[i]).second)
        add({PovmIssue::Kind::DuplicateLabel, static_cast<int>(i), 0.0, {}});
  }
  d.valid = d.issues.empty();
  return d;
}

DiscretePOVM::DiscretePOVM(int dim, std::vector<ComplexMatrix> effects,
                           std::vector<std::string> labels, const Tolerances& tol)
    : dim_(dim), effects_(std::move(effects)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(effects_.size());
    for (size_t i = 0; i < effects_.size(); ++i) labels_.push_back("x" + std::to_string(i + 1));
  }
  if (labels_.size() != effects_.size())
    throw DimMismatch("label count does not match effect count");
  PovmDiagnostics d = check(dim_, effects_, labels_, tol);
  if (!d.valid) throw PovmValidationError(d, "invalid POVM: " + d.summary());
  // keep exactly Hermitian copies so downstream eigensolves never see
  // asymmetric roundoff
  for (auto& e : effects_) e = e.hermitized();
}

ComplexMatrix DiscretePOVM::subset_effect(uint32_t mask) const {
  ComplexMatrix s(dim_, dim_);
  for (int i = 0; i < size(); ++i)
    if (mask & (1u << i)) s += effects_[i];
  return s;
}

EffectDecomposition effect_decomposition(const DiscretePOVM& m, int i,
                                         const Tolerances& tol) {
  const HermitianEig e = eig_hermitian(m.effect(i), tol);
  const double cutoff = tol.rank * e.eigenvalues.back();
  EffectDecomposition dec;
  dec.multiplicity = 0;
  for (int k = 0; k < m.dim(); ++k) {
    const double lambda = e.eigenvalues[k];
    if (lambda <= cutoff) continue;
    CVector v = e.eigenvectors.column(k);
    const double scale = std::sqrt(lambda);
    for (auto& x : v) x *= scale;
    dec.eigenvalues.push_back(lambda);
    dec.vectors.push_back(std::move(v));
    ++dec.multiplicity;
  }
  return dec;
}

int effect_rank(const DiscretePOVM& m, int i, const Tolerances& tol) {
  return effect_decomposition(m, i, tol).multiplicity;
}

bool is_rank_one(const DiscretePOVM& m, const Tolerances& tol) {
  for (int i = 0; i < m.size(); ++i)
    if (effect_rank(m, i, tol) != 1) return false;
  return true;
}

bool is_pvm(const DiscretePOVM& m, const Tolerances& tol) {
  for (const auto& e : m.effects())
    if (max_abs_diff(e * e, e) > tol.validate) return false;
  return true;
}

bool is_regular(const DiscretePOVM& m, const Tolerances& tol) {
  const int n = m.size();
  if (n > tol.range_cap)
    throw TooManyOutcomes("is_regular: " + std::to_string(n) + " outcomes exceed the cap");
  const ComplexMatrix id = ComplexMatrix::identity(m.dim());
  const ComplexMatrix half = 0.5 * id;

  // Deduplicate subset sums first; each distinct proper element gets two
  // Loewner tests against I/2.
  std::vector<ComplexMatrix> seen;
  const uint32_t subsets = 1u << n;
  for (uint32_t mask = 0; mask < subsets; ++mask) {
    const ComplexMatrix e = m.subset_effect(mask);
    if (e.max_abs() <= tol.range) continue;                  // M(X) = 0
    if (max_abs_diff(e, id) <= tol.range) continue;          // M(X) = I
    bool duplicate = false;
    for (const auto& s : seen)
      if (max_abs_diff(e, s) <= tol.range) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    if (loewner_leq(e, half, tol.psd) || loewner_leq(half, e, tol.psd)) return false;
    seen.push_back(e);
  }
  return true;
}

}  // namespace povmkit
