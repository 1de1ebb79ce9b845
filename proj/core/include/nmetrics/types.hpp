#ifndef NMETRICS_TYPES_HPP
#define NMETRICS_TYPES_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nmetrics/error.hpp"

namespace nmetrics {

/**
 * @brief A point in D-dimensional objective space, minimisation convention.
 *
 * Every entry must be finite and D >= 1; both are enforced at construction.
 * Maximisation inputs have to be negated by the caller. Instances are
 * immutable after construction.
 */
class ObjectiveVector {
 public:
  explicit ObjectiveVector(std::vector<double> values);
  ObjectiveVector(std::initializer_list<double> values);

  [[nodiscard]] std::size_t dimension() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t k) const noexcept { return values_[k]; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }

  [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
  [[nodiscard]] auto end() const noexcept { return values_.end(); }

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;

 private:
  std::vector<double> values_;
};

/// Euclidean distance between two points of equal dimension.
[[nodiscard]] double euclidean_distance(const ObjectiveVector& a, const ObjectiveVector& b);

/**
 * @brief One returned solution: an opaque id together with its true objective
 * vector and the (possibly noisy) estimated vector reported for it.
 */
struct EvaluatedSolution {
  std::string id;
  ObjectiveVector true_values;
  ObjectiveVector estimated_values;
};

/**
 * @brief The set of solutions returned by an algorithm.
 *
 * Invariants: at least one member, all true/estimated vectors share one
 * dimension, and ids are unique within the set.
 */
class SolutionSet {
 public:
  explicit SolutionSet(std::vector<EvaluatedSolution> solutions);

  /// Builds a set from parallel id/true/estimated columns.
  [[nodiscard]] static SolutionSet from_columns(std::vector<std::string> ids,
                                                std::vector<ObjectiveVector> true_values,
                                                std::vector<ObjectiveVector> estimated_values);

  [[nodiscard]] std::size_t size() const noexcept { return solutions_.size(); }
  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
  [[nodiscard]] const std::vector<EvaluatedSolution>& solutions() const noexcept {
    return solutions_;
  }
  [[nodiscard]] const EvaluatedSolution& operator[](std::size_t i) const noexcept {
    return solutions_[i];
  }

  /// Copies of the true / estimated columns, in solution order.
  [[nodiscard]] std::vector<ObjectiveVector> true_values() const;
  [[nodiscard]] std::vector<ObjectiveVector> estimated_values() const;

 private:
  std::vector<EvaluatedSolution> solutions_;
  std::size_t dimension_;
};

/**
 * @brief Approximation of the target Pareto front used by the IGD family.
 *
 * Targets must be mutually non-dominated; this is checked eagerly at
 * construction so metric code can rely on it.
 */
class ReferenceSet {
 public:
  explicit ReferenceSet(std::vector<ObjectiveVector> targets);

  [[nodiscard]] std::size_t size() const noexcept { return targets_.size(); }
  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
  [[nodiscard]] const std::vector<ObjectiveVector>& targets() const noexcept { return targets_; }
  [[nodiscard]] const ObjectiveVector& operator[](std::size_t i) const noexcept {
    return targets_[i];
  }

 private:
  std::vector<ObjectiveVector> targets_;
  std::size_t dimension_;
};

}  // namespace nmetrics

#endif  // NMETRICS_TYPES_HPP
