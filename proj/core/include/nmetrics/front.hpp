#ifndef NMETRICS_FRONT_HPP
#define NMETRICS_FRONT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nmetrics/types.hpp"

namespace nmetrics {

/**
 * @brief Parameters of the synthetic two-objective test front.
 *
 * The default front is f2 = 1 - sqrt(f1) on [0, 1], which is convex so that
 * linear-utility R2 engages more than the two extreme solutions. The concave
 * flag switches to f2 = 1 - f1^2 to demonstrate the convex-hull blindness of
 * linear utilities. Both are scaled by `scale`.
 */
struct FrontParams {
  std::size_t reference_size = 50;  ///< evenly spaced targets on the front, >= 2
  double scale = 1.0;               ///< > 0
  double off_front_fraction = 0.5;  ///< share of solutions pushed off the front, in [0, 1]
  double max_offset = 0.2;          ///< offset upper bound before scaling, >= 0
  bool concave = false;
};

/// A generated instance: solution truths (on and above the front) plus the
/// reference targets. The scaled endpoints (0, scale) and (scale, 0) are
/// always part of the reference set.
struct GeneratedFront {
  std::vector<std::string> ids;
  std::vector<ObjectiveVector> truths;
  ReferenceSet reference;
};

/// Deterministic given the seed. Requires n >= 2. Generated truths never lie
/// below the front.
[[nodiscard]] GeneratedFront generate_test_front(std::size_t n, std::uint64_t seed,
                                                 const FrontParams& params = {});

}  // namespace nmetrics

#endif  // NMETRICS_FRONT_HPP
