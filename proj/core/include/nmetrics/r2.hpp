#ifndef NMETRICS_R2_HPP
#define NMETRICS_R2_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nmetrics/types.hpp"
#include "nmetrics/utility.hpp"
#include "nmetrics/weights.hpp"

namespace nmetrics {

/// Per-weight-vector outcome of an R2-family computation.
struct R2SampleRecord {
  std::size_t weight_index;
  std::size_t solution_index;  ///< argmin; ties resolve to the lowest index
  double utility;              ///< the utility that entered the mean
};

/// value is the mean of the per_sample utilities (fixed summation order).
struct R2Result {
  double value = 0.0;
  std::vector<R2SampleRecord> per_sample;
};

/**
 * @brief Classical R2: for every sampled weight vector, the best (lowest)
 * utility achieved within the set enters the mean.
 */
[[nodiscard]] R2Result r2(std::span<const ObjectiveVector> values, const WeightSampleSet& weights,
                          const UtilityModel& model = {});

/**
 * @brief Noise-aware R2: per weight vector a solution is selected by its
 * estimated utility, but the mean is taken over the selected solutions' true
 * utilities. Selecting on estimates can never beat the per-weight true
 * optimum, so n_r2(S).value >= r2(true values of S).value always.
 */
[[nodiscard]] R2Result n_r2(const SolutionSet& set, const WeightSampleSet& weights,
                            const UtilityModel& model = {});

/// One linear piece of the two-objective lower utility envelope over [0, 1].
struct EnvelopeSegment {
  std::size_t point_index;  ///< index into the input values
  double lambda_begin;
  double lambda_end;
};

/**
 * @brief Pieces of lambda -> min_j [lambda * f1_j + (1-lambda) * f2_j] on
 * [0, 1], i.e. the lower envelope of the n utility lines (equivalently the
 * lower-left convex hull of the points). Built by slope-sorting and a
 * monotone-chain stack in O(n log n). Among coincident lines the lowest
 * input index wins.
 */
[[nodiscard]] std::vector<EnvelopeSegment> linear_utility_envelope_2d(
    std::span<const ObjectiveVector> values);

/**
 * @brief Exact value of the integral of min_j [lambda * f1_j + (1-lambda) * f2_j]
 * for lambda uniform on [0, 1]: the continuous-distribution limit of r2 with
 * linear utilities and two objectives. Each envelope piece is integrated in
 * closed form.
 */
[[nodiscard]] double analytic_r2_linear_2d(std::span<const ObjectiveVector> values);

}  // namespace nmetrics

#endif  // NMETRICS_R2_HPP
