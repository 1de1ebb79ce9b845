#include "nmetrics/igd.hpp"

#include <cmath>

namespace nmetrics {

double igd_plus_distance(const ObjectiveVector& target, const ObjectiveVector& point) {
  if (target.dimension() != point.dimension()) {
    throw dimension_error("igd_plus_distance: dimension mismatch");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < target.dimension(); ++k) {
    const double over = std::max(point[k] - target[k], 0.0);
    sum += over * over;
  }
  return std::sqrt(sum);
}

namespace {

using DistanceFn = double (*)(const ObjectiveVector&, const ObjectiveVector&);

double plain_distance(const ObjectiveVector& target, const ObjectiveVector& point) {
  return euclidean_distance(target, point);
}

DistanceFn selection_fn(const IgdOptions& options) {
  return options.selection == SelectionDistance::IgdPlus ? igd_plus_distance : plain_distance;
}

void check_dimensions(std::size_t points_dimension, const ReferenceSet& reference) {
  if (points_dimension != reference.dimension()) {
    throw dimension_error("igd: solution/reference dimension mismatch");
  }
}

double finalise(double sum, std::size_t target_count, Normalise normalise) {
  return normalise == Normalise::Mean ? sum / static_cast<double>(target_count) : sum;
}

// Classical form: one distance drives both the matching and the value.
IGDResult classical(std::span<const ObjectiveVector> points, const ReferenceSet& reference,
                    const IgdOptions& options, DistanceFn distance) {
  if (points.empty()) {
    throw invariant_error("igd: empty point list");
  }
  check_dimensions(points.front().dimension(), reference);

  IGDResult result;
  result.per_target.reserve(reference.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const ObjectiveVector& target = reference[i];
    std::size_t best = 0;
    double best_distance = distance(target, points[0]);
    for (std::size_t j = 1; j < points.size(); ++j) {
      const double d = distance(target, points[j]);
      if (d < best_distance) {
        best_distance = d;
        best = j;
      }
    }
    result.per_target.push_back(IGDTargetRecord{i, best, best_distance});
    sum += best_distance;
  }
  result.value = finalise(sum, reference.size(), options.normalise);
  return result;
}

// Noisy form: match on estimated values, score the matched solution's true
// values.
IGDResult noisy(const SolutionSet& set, const ReferenceSet& reference, const IgdOptions& options,
                DistanceFn realised_distance) {
  check_dimensions(set.dimension(), reference);
  const std::vector<EvaluatedSolution>& solutions = set.solutions();
  const DistanceFn perceived_distance = selection_fn(options);

  IGDResult result;
  result.per_target.reserve(reference.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const ObjectiveVector& target = reference[i];
    std::size_t picked = 0;
    double best_perceived = perceived_distance(target, solutions[0].estimated_values);
    for (std::size_t j = 1; j < solutions.size(); ++j) {
      const double d = perceived_distance(target, solutions[j].estimated_values);
      if (d < best_perceived) {
        best_perceived = d;
        picked = j;
      }
    }
    const double realised = realised_distance(target, solutions[picked].true_values);
    result.per_target.push_back(IGDTargetRecord{i, picked, realised});
    sum += realised;
  }
  result.value = finalise(sum, reference.size(), options.normalise);
  return result;
}

}  // namespace

IGDResult igd(std::span<const ObjectiveVector> points, const ReferenceSet& reference,
              const IgdOptions& options) {
  return classical(points, reference, options, plain_distance);
}

IGDResult igd_plus(std::span<const ObjectiveVector> points, const ReferenceSet& reference,
                   const IgdOptions& options) {
  return classical(points, reference, options, igd_plus_distance);
}

IGDResult n_igd(const SolutionSet& set, const ReferenceSet& reference, const IgdOptions& options) {
  return noisy(set, reference, options, plain_distance);
}

IGDResult n_igd_plus(const SolutionSet& set, const ReferenceSet& reference,
                     const IgdOptions& options) {
  return noisy(set, reference, options, igd_plus_distance);
}

}  // namespace nmetrics
