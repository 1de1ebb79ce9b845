#include "nmetrics/noise.hpp"

#include "nmetrics/rng.hpp"

namespace nmetrics {

std::vector<ObjectiveVector> apply_noise(std::span<const ObjectiveVector> truth,
                                         const NoiseModel& model) {
  if (model.eta < 0.0) {
    throw invariant_error("noise half-width eta must be non-negative");
  }
  std::vector<ObjectiveVector> estimates;
  estimates.reserve(truth.size());
  if (model.eta == 0.0) {
    estimates.assign(truth.begin(), truth.end());
    return estimates;
  }
  std::mt19937_64 gen(model.seed);
  for (const ObjectiveVector& t : truth) {
    std::vector<double> r(t.dimension());
    for (std::size_t k = 0; k < t.dimension(); ++k) {
      r[k] = t[k] + uniform_in(gen, -model.eta, model.eta);
    }
    estimates.emplace_back(std::move(r));
  }
  return estimates;
}

}  // namespace nmetrics
