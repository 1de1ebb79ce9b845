#include "nmetrics/dominance.hpp"

namespace nmetrics {

bool weakly_dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
  if (u.dimension() != v.dimension()) {
    throw dimension_error("dominance check: dimension mismatch");
  }
  for (std::size_t k = 0; k < u.dimension(); ++k) {
    if (u[k] > v[k]) {
      return false;
    }
  }
  return true;
}

bool dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
  return weakly_dominates(u, v) && u != v;
}

std::vector<std::size_t> nondominated_filter(std::span<const ObjectiveVector> points) {
  if (points.empty()) {
    throw invariant_error("nondominated_filter: empty point list");
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool is_dominated = false;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i && dominates(points[j], points[i])) {
        is_dominated = true;
        break;
      }
    }
    if (!is_dominated) {
      kept.push_back(i);
    }
  }
  return kept;
}

double true_nondominated_fraction(const SolutionSet& set) {
  const std::vector<ObjectiveVector> truths = set.true_values();
  const std::size_t kept = nondominated_filter(truths).size();
  return static_cast<double>(kept) / static_cast<double>(set.size());
}

}  // namespace nmetrics
