#ifndef NMETRICS_NOISE_HPP
#define NMETRICS_NOISE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nmetrics/types.hpp"

namespace nmetrics {

enum class NoiseKind { UniformBox };

/// Additive noise drawn i.i.d. from [-eta, eta] per coordinate.
struct NoiseModel {
  NoiseKind kind = NoiseKind::UniformBox;
  double eta = 0.0;  ///< half-width, >= 0; eta == 0 reproduces the input exactly
  std::uint64_t seed = 0;
};

/// Returns truth[j] + eps[j] with eps uniform in [-eta, eta]^D,
/// deterministic given the seed. Length and dimension are preserved.
[[nodiscard]] std::vector<ObjectiveVector> apply_noise(std::span<const ObjectiveVector> truth,
                                                       const NoiseModel& model);

}  // namespace nmetrics

#endif  // NMETRICS_NOISE_HPP
