#ifndef NMETRICS_UTILITY_HPP
#define NMETRICS_UTILITY_HPP

#include <optional>
#include <span>

#include "nmetrics/types.hpp"
#include "nmetrics/weights.hpp"

namespace nmetrics {

enum class UtilityKind { Linear, Chebycheff };

/// Margin subtracted in every coordinate when a default ideal point is
/// derived from the data at hand.
inline constexpr double kIdealPointMargin = 1e-6;

/**
 * @brief Scalarising utility model. Lower utility is better.
 *
 * Linear:      U(f, w) = sum_k w_k * f_k
 * Chebycheff:  U(f, w) = max_k w_k * max(f_k - z_k, 0)
 *
 * where z is the ideal point. Chebycheff requires ideal_point; deviations
 * below the ideal clamp to zero, which keeps the utility weakly monotone
 * with respect to Pareto dominance. Metric entry points fill in a default
 * ideal point (componentwise minimum of the data they see, minus
 * kIdealPointMargin) when none is supplied.
 */
struct UtilityModel {
  UtilityKind kind = UtilityKind::Linear;
  std::optional<ObjectiveVector> ideal_point;
};

/// Evaluates the model on one objective vector.
[[nodiscard]] double utility(const UtilityModel& model, const ObjectiveVector& f,
                             const WeightVector& weights);

/// Componentwise minimum of a non-empty collection of equal-dimension points.
[[nodiscard]] ObjectiveVector componentwise_min(std::span<const ObjectiveVector> points);

/// Returns the model unchanged unless it is Chebycheff without an ideal
/// point, in which case the ideal is set to componentwise_min(points) minus
/// kIdealPointMargin.
[[nodiscard]] UtilityModel with_default_ideal_point(UtilityModel model,
                                                    std::span<const ObjectiveVector> points);

}  // namespace nmetrics

#endif  // NMETRICS_UTILITY_HPP
