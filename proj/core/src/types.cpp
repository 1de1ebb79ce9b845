#include "nmetrics/types.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "nmetrics/dominance.hpp"

namespace nmetrics {

namespace {

void check_finite(const std::vector<double>& values) {
  if (values.empty()) {
    throw invariant_error("objective vector must have at least one entry");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw invariant_error("objective vector entries must be finite");
    }
  }
}

}  // namespace

ObjectiveVector::ObjectiveVector(std::vector<double> values) : values_(std::move(values)) {
  check_finite(values_);
}

ObjectiveVector::ObjectiveVector(std::initializer_list<double> values)
    : ObjectiveVector(std::vector<double>(values)) {}

double euclidean_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.dimension() != b.dimension()) {
    throw dimension_error("euclidean_distance: dimension mismatch");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

SolutionSet::SolutionSet(std::vector<EvaluatedSolution> solutions)
    : solutions_(std::move(solutions)), dimension_(0) {
  if (solutions_.empty()) {
    throw invariant_error("solution set must contain at least one solution");
  }
  dimension_ = solutions_.front().true_values.dimension();
  std::unordered_set<std::string> seen;
  seen.reserve(solutions_.size());
  for (const EvaluatedSolution& s : solutions_) {
    if (s.true_values.dimension() != dimension_ || s.estimated_values.dimension() != dimension_) {
      throw dimension_error("solution set members must share one dimension");
    }
    if (!seen.insert(s.id).second) {
      throw invariant_error("duplicate solution id '" + s.id + "'");
    }
  }
}

SolutionSet SolutionSet::from_columns(std::vector<std::string> ids,
                                      std::vector<ObjectiveVector> true_values,
                                      std::vector<ObjectiveVector> estimated_values) {
  if (ids.size() != true_values.size() || ids.size() != estimated_values.size()) {
    throw invariant_error("from_columns: column lengths differ");
  }
  std::vector<EvaluatedSolution> solutions;
  solutions.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    solutions.push_back(EvaluatedSolution{std::move(ids[i]), std::move(true_values[i]),
                                          std::move(estimated_values[i])});
  }
  return SolutionSet(std::move(solutions));
}

std::vector<ObjectiveVector> SolutionSet::true_values() const {
  std::vector<ObjectiveVector> out;
  out.reserve(solutions_.size());
  for (const EvaluatedSolution& s : solutions_) {
    out.push_back(s.true_values);
  }
  return out;
}

std::vector<ObjectiveVector> SolutionSet::estimated_values() const {
  std::vector<ObjectiveVector> out;
  out.reserve(solutions_.size());
  for (const EvaluatedSolution& s : solutions_) {
    out.push_back(s.estimated_values);
  }
  return out;
}

ReferenceSet::ReferenceSet(std::vector<ObjectiveVector> targets)
    : targets_(std::move(targets)), dimension_(0) {
  if (targets_.empty()) {
    throw invariant_error("reference set must contain at least one target");
  }
  dimension_ = targets_.front().dimension();
  for (const ObjectiveVector& t : targets_) {
    if (t.dimension() != dimension_) {
      throw dimension_error("reference targets must share one dimension");
    }
  }
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    for (std::size_t j = 0; j < targets_.size(); ++j) {
      if (i != j && dominates(targets_[i], targets_[j])) {
        throw invariant_error("reference targets must be mutually non-dominated (target " +
                              std::to_string(i) + " dominates target " + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace nmetrics
