#ifndef NMETRICS_DIAGNOSTICS_HPP
#define NMETRICS_DIAGNOSTICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nmetrics/types.hpp"
#include "nmetrics/utility.hpp"
#include "nmetrics/weights.hpp"

namespace nmetrics {

/**
 * @brief One decision-maker selection error: the picked solution's true
 * quality is strictly worse than the best available one.
 *
 * For the utility view, sample_index is a weight index and regret a utility
 * difference; for the distance view it is a reference-target index and the
 * regret a distance difference. Records with zero regret are omitted: a tie
 * between equally good solutions is not an error.
 */
struct RegretRecord {
  std::size_t sample_index;
  std::size_t picked_index;
  std::size_t best_index;
  double regret;  ///< > 0
};

/**
 * @brief Ids of solutions that are non-dominated among the set's true values
 * but dominated among its estimated values (falsely dropped from the
 * apparent front). Dominance is evaluated within the returned set only.
 */
[[nodiscard]] std::vector<std::string> error_by_exclusion(const SolutionSet& set);

/// Mirror image: dominated among true values but non-dominated among the
/// estimated ones (falsely kept on the apparent front).
[[nodiscard]] std::vector<std::string> error_by_inclusion(const SolutionSet& set);

/**
 * @brief Per weight vector, compares the solution picked by estimated
 * utility against the true-utility optimum and records the positive regrets.
 *
 * The regrets summed over all weight samples and divided by the sample count
 * reproduce n_r2 - r2(true values) for the same inputs.
 */
[[nodiscard]] std::vector<RegretRecord> selection_errors(const SolutionSet& set,
                                                         const WeightSampleSet& weights,
                                                         const UtilityModel& model = {});

/// Distance flavour of selection_errors: per reference target, realised
/// minus optimal true distance under estimated-nearest selection.
[[nodiscard]] std::vector<RegretRecord> distance_selection_errors(const SolutionSet& set,
                                                                  const ReferenceSet& reference);

/// Mean Euclidean distance between each solution's estimated and true values.
[[nodiscard]] double noise_misinformation(const SolutionSet& set);

/**
 * @brief Bundle of all noise diagnostics for one solution set.
 *
 * excluded_ids and included_ids are disjoint by construction. regret_sum is
 * the sum of the recorded selection regrets in sample order; sample_count is
 * the number of weight vectors examined (including regret-free ones).
 */
struct ErrorReport {
  std::vector<std::string> excluded_ids;
  std::vector<std::string> included_ids;
  std::vector<RegretRecord> selection;
  double misinformation = 0.0;
  double regret_sum = 0.0;
  std::size_t sample_count = 0;

  [[nodiscard]] double mean_regret() const {
    return sample_count == 0 ? 0.0 : regret_sum / static_cast<double>(sample_count);
  }
};

/// Runs all diagnostics on one set.
[[nodiscard]] ErrorReport error_report(const SolutionSet& set, const WeightSampleSet& weights,
                                       const UtilityModel& model = {});

}  // namespace nmetrics

#endif  // NMETRICS_DIAGNOSTICS_HPP
