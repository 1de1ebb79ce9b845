#ifndef NMETRICS_FIGURE_DATA_HPP
#define NMETRICS_FIGURE_DATA_HPP

#include <filesystem>
#include <optional>

#include "nmetrics/types.hpp"
#include "nmetrics/weights.hpp"

namespace nmetrics {

/**
 * @brief Writes the plot-data bundle for one consistent run into `directory`
 * (created if missing), plus a manifest.json naming each artefact.
 *
 * Files:
 *  - points.csv: paired true/estimated vectors with segment lengths.
 *  - r2_linear_selection.csv: per weight vector, the solution selected by
 *    estimated linear utility with its estimated and true utilities.
 *  - r2_hull_segments.csv (two objectives only): the lower envelope of the
 *    estimated values with the weight range favouring each solution.
 *  - chebycheff_rays.csv: per weight vector, the ray from the ideal point
 *    and the selected solution.
 *  - igd_matching.csv / nigd_matching.csv: per reference target, the matched
 *    solution with Euclidean and one-sided distances (estimated-value
 *    matching for the classical view, true-value scoring for the noisy one).
 *
 * The ideal point defaults to the componentwise minimum over the set's true
 * and estimated values and the reference targets, minus the usual margin.
 */
void export_figure_data(const SolutionSet& set, const ReferenceSet& reference,
                        const WeightSampleSet& weights, const std::filesystem::path& directory,
                        std::optional<ObjectiveVector> ideal_point = {});

}  // namespace nmetrics

#endif  // NMETRICS_FIGURE_DATA_HPP
