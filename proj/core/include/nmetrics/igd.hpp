#ifndef NMETRICS_IGD_HPP
#define NMETRICS_IGD_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nmetrics/types.hpp"

namespace nmetrics {

/// Sum follows the plain-sum definition; Mean divides by the number of
/// reference targets for cross-size comparisons.
enum class Normalise { Sum, Mean };

/// Distance used by the noisy variants when selecting a solution per target.
/// The realised (scored) distance is unaffected.
enum class SelectionDistance { Euclidean, IgdPlus };

struct IgdOptions {
  Normalise normalise = Normalise::Sum;
  SelectionDistance selection = SelectionDistance::Euclidean;
};

/// Per-reference-target outcome of an IGD-family computation.
struct IGDTargetRecord {
  std::size_t target_index;
  std::size_t solution_index;  ///< argmin; ties resolve to the lowest index
  double distance;             ///< the realised distance that entered the value
};

/// value is the sum (or mean, per options) of the per_target distances.
struct IGDResult {
  double value = 0.0;
  std::vector<IGDTargetRecord> per_target;
};

/**
 * @brief One-sided dominance distance sqrt(sum_k max(point_k - target_k, 0)^2).
 *
 * Zero whenever point weakly dominates target, and never larger than the
 * Euclidean distance.
 */
[[nodiscard]] double igd_plus_distance(const ObjectiveVector& target,
                                       const ObjectiveVector& point);

/// Classical IGD: for each target, the Euclidean distance to the closest
/// point. options.selection is ignored (selection and scoring coincide).
[[nodiscard]] IGDResult igd(std::span<const ObjectiveVector> points, const ReferenceSet& reference,
                            const IgdOptions& options = {});

/// Classical IGD+: as igd but with the one-sided dominance distance.
[[nodiscard]] IGDResult igd_plus(std::span<const ObjectiveVector> points,
                                 const ReferenceSet& reference, const IgdOptions& options = {});

/**
 * @brief Noise-aware IGD: per target the solution closest in *estimated*
 * values is selected (Euclidean by default), and the Euclidean distance from
 * the target to that solution's *true* values is scored.
 */
[[nodiscard]] IGDResult n_igd(const SolutionSet& set, const ReferenceSet& reference,
                              const IgdOptions& options = {});

/// Noise-aware IGD+: selection as in n_igd, scoring with igd_plus_distance.
[[nodiscard]] IGDResult n_igd_plus(const SolutionSet& set, const ReferenceSet& reference,
                                   const IgdOptions& options = {});

}  // namespace nmetrics

#endif  // NMETRICS_IGD_HPP
