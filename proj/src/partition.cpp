#include "povmkit/partition.hpp"

#include <algorithm>
#include <numeric>

namespace povmkit {

namespace {

// Relative Cauchy-Schwarz defect: zero exactly when the rank-1 effects are
// proportional.
bool proportional(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  const double cross = std::norm((a * b).trace());
  const double aa = (a * a).trace().real();
  const double bb = (b * b).trace().real();
  return cross >= (1.0 - tol) * aa * bb;
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

void fill_class_data(const DiscretePOVM& m, OutcomePartition& p, const Tolerances& tol) {
  for (const auto& cls : p.classes) {
    ComplexMatrix sum(m.dim(), m.dim());
    for (int i : cls) sum += m.effect(i);
    const int rank = matrix_rank(sum, tol.rank);
    p.class_weights.push_back(rank == 1 ? std::optional<double>(sum.trace().real())
                                        : std::nullopt);
    p.class_effects.push_back(std::move(sum));
  }
}

}  // namespace

int OutcomePartition::class_of(int outcome) const {
  for (size_t c = 0; c < classes.size(); ++c)
    for (int i : classes[c])
      if (i == outcome) return static_cast<int>(c);
  return -1;
}

OutcomePartition partition_from_classes(const DiscretePOVM& m,
                                        std::vector<std::vector<int>> classes,
                                        const Tolerances& tol) {
  const int n = m.size();
  std::vector<int> seen(n, 0);
  for (auto& cls : classes) {
    if (cls.empty()) throw BadPartition("empty class");
    std::sort(cls.begin(), cls.end());
    for (int i : cls) {
      if (i < 0 || i >= n) throw BadPartition("outcome index out of range");
      if (seen[i]++) throw BadPartition("outcome listed twice");
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw BadPartition("outcome " + std::to_string(i) + " not covered");
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  OutcomePartition p;
  p.classes = std::move(classes);
  fill_class_data(m, p, tol);
  return p;
}

OutcomePartition equivalence_classes(const DiscretePOVM& m, const Tolerances& tol) {
  if (!is_rank_one(m, tol))
    throw NotRankOne("equivalence classes are defined for rank-1 POVMs");
  const int n = m.size();

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (proportional(m.effect(i), m.effect(j), tol.proportional)) {
        const int ri = find_root(parent, i), rj = find_root(parent, j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }

  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[find_root(parent, i)].push_back(i);
  std::vector<std::vector<int>> classes;
  for (auto& g : groups)
    if (!g.empty()) classes.push_back(std::move(g));

  // Union-find can merge through a numerically intransitive chain; refuse to
  // return a class whose members are not all pairwise proportional.
  for (const auto& cls : classes)
    for (size_t a = 0; a < cls.size(); ++a)
      for (size_t b = a + 1; b < cls.size(); ++b)
        if (!proportional(m.effect(cls[a]), m.effect(cls[b]), tol.proportional))
          throw Error("proportionality closure is not transitive at this tolerance");

  return partition_from_classes(m, std::move(classes), tol);
}

DiscretePOVM relabel(const DiscretePOVM& m, const OutcomePartition& p,
                     const Tolerances& tol) {
  std::vector<ComplexMatrix> effects = p.class_effects;
  std::vector<std::string> labels;
  labels.reserve(p.classes.size());
  for (const auto& cls : p.classes) {
    std::string l;
    for (size_t k = 0; k < cls.size(); ++k) {
      if (k) l += '+';
      l += m.label(cls[k]);
    }
    labels.push_back(std::move(l));
  }
  return DiscretePOVM(m.dim(), std::move(effects), std::move(labels), tol);
}

}  // namespace povmkit
