#ifndef NMETRICS_DOMINANCE_HPP
#define NMETRICS_DOMINANCE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nmetrics/types.hpp"

namespace nmetrics {

/**
 * @brief Weak Pareto dominance (minimisation): u[k] <= v[k] for every k.
 */
[[nodiscard]] bool weakly_dominates(const ObjectiveVector& u, const ObjectiveVector& v);

/**
 * @brief Pareto dominance (minimisation): u <= v componentwise and u != v.
 *
 * Equal vectors never dominate each other.
 */
[[nodiscard]] bool dominates(const ObjectiveVector& u, const ObjectiveVector& v);

/**
 * @brief Indices of the points not dominated by any other point in the list.
 *
 * Duplicate vectors are all retained: neither copy dominates the other under
 * the strict definition. Indices are returned in ascending order.
 */
[[nodiscard]] std::vector<std::size_t> nondominated_filter(
    std::span<const ObjectiveVector> points);

/**
 * @brief Fraction of solutions whose true vectors are non-dominated within
 * the set's own true values.
 */
[[nodiscard]] double true_nondominated_fraction(const SolutionSet& set);

}  // namespace nmetrics

#endif  // NMETRICS_DOMINANCE_HPP
