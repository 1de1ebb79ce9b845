#include "nmetrics/diagnostics.hpp"

#include <algorithm>

#include "nmetrics/dominance.hpp"

namespace nmetrics {

namespace {

std::vector<bool> nondominated_mask(const std::vector<ObjectiveVector>& points) {
  std::vector<bool> mask(points.size(), false);
  for (std::size_t i : nondominated_filter(points)) {
    mask[i] = true;
  }
  return mask;
}

UtilityModel resolve_for_set(const UtilityModel& model, const SolutionSet& set) {
  if (model.kind != UtilityKind::Chebycheff || model.ideal_point) {
    return model;
  }
  std::vector<ObjectiveVector> all = set.true_values();
  const std::vector<ObjectiveVector> estimates = set.estimated_values();
  all.insert(all.end(), estimates.begin(), estimates.end());
  return with_default_ideal_point(model, all);
}

}  // namespace

std::vector<std::string> error_by_exclusion(const SolutionSet& set) {
  const std::vector<bool> truly_nd = nondominated_mask(set.true_values());
  const std::vector<bool> apparently_nd = nondominated_mask(set.estimated_values());
  std::vector<std::string> ids;
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (truly_nd[j] && !apparently_nd[j]) {
      ids.push_back(set[j].id);
    }
  }
  return ids;
}

std::vector<std::string> error_by_inclusion(const SolutionSet& set) {
  const std::vector<bool> truly_nd = nondominated_mask(set.true_values());
  const std::vector<bool> apparently_nd = nondominated_mask(set.estimated_values());
  std::vector<std::string> ids;
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (apparently_nd[j] && !truly_nd[j]) {
      ids.push_back(set[j].id);
    }
  }
  return ids;
}

std::vector<RegretRecord> selection_errors(const SolutionSet& set, const WeightSampleSet& weights,
                                           const UtilityModel& model) {
  if (weights.dimension() != set.dimension()) {
    throw dimension_error("selection_errors: weight dimension differs from set dimension");
  }
  const UtilityModel resolved = resolve_for_set(model, set);
  const std::vector<EvaluatedSolution>& solutions = set.solutions();

  std::vector<RegretRecord> records;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const WeightVector& w = weights[i];
    std::size_t picked = 0;
    double best_perceived = utility(resolved, solutions[0].estimated_values, w);
    std::size_t best = 0;
    double best_true = utility(resolved, solutions[0].true_values, w);
    for (std::size_t j = 1; j < solutions.size(); ++j) {
      const double perceived = utility(resolved, solutions[j].estimated_values, w);
      if (perceived < best_perceived) {
        best_perceived = perceived;
        picked = j;
      }
      const double truth = utility(resolved, solutions[j].true_values, w);
      if (truth < best_true) {
        best_true = truth;
        best = j;
      }
    }
    if (picked != best) {
      const double picked_true = utility(resolved, solutions[picked].true_values, w);
      if (picked_true > best_true) {
        records.push_back(RegretRecord{i, picked, best, picked_true - best_true});
      }
    }
  }
  return records;
}

std::vector<RegretRecord> distance_selection_errors(const SolutionSet& set,
                                                    const ReferenceSet& reference) {
  if (reference.dimension() != set.dimension()) {
    throw dimension_error("distance_selection_errors: reference dimension differs from set");
  }
  const std::vector<EvaluatedSolution>& solutions = set.solutions();

  std::vector<RegretRecord> records;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const ObjectiveVector& target = reference[i];
    std::size_t picked = 0;
    double best_perceived = euclidean_distance(target, solutions[0].estimated_values);
    std::size_t best = 0;
    double best_true = euclidean_distance(target, solutions[0].true_values);
    for (std::size_t j = 1; j < solutions.size(); ++j) {
      const double perceived = euclidean_distance(target, solutions[j].estimated_values);
      if (perceived < best_perceived) {
        best_perceived = perceived;
        picked = j;
      }
      const double truth = euclidean_distance(target, solutions[j].true_values);
      if (truth < best_true) {
        best_true = truth;
        best = j;
      }
    }
    if (picked != best) {
      const double realised = euclidean_distance(target, solutions[picked].true_values);
      if (realised > best_true) {
        records.push_back(RegretRecord{i, picked, best, realised - best_true});
      }
    }
  }
  return records;
}

double noise_misinformation(const SolutionSet& set) {
  double sum = 0.0;
  for (const EvaluatedSolution& s : set.solutions()) {
    sum += euclidean_distance(s.estimated_values, s.true_values);
  }
  return sum / static_cast<double>(set.size());
}

ErrorReport error_report(const SolutionSet& set, const WeightSampleSet& weights,
                         const UtilityModel& model) {
  ErrorReport report;
  report.excluded_ids = error_by_exclusion(set);
  report.included_ids = error_by_inclusion(set);
  report.selection = selection_errors(set, weights, model);
  report.misinformation = noise_misinformation(set);
  report.sample_count = weights.size();
  for (const RegretRecord& r : report.selection) {
    report.regret_sum += r.regret;
  }
  return report;
}

}  // namespace nmetrics
