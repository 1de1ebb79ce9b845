#ifndef NMETRICS_WEIGHTS_HPP
#define NMETRICS_WEIGHTS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nmetrics/error.hpp"

namespace nmetrics {

/// Admissible deviation of a weight vector's sum from 1.
inline constexpr double kWeightSumTolerance = 1e-9;

/**
 * @brief A scalarisation weight vector: non-negative entries summing to 1.
 *
 * Zero entries are allowed (boundary of the simplex).
 */
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  WeightVector(std::initializer_list<double> weights);

  [[nodiscard]] std::size_t dimension() const noexcept { return weights_.size(); }
  [[nodiscard]] double operator[](std::size_t k) const noexcept { return weights_[k]; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return weights_; }

  [[nodiscard]] auto begin() const noexcept { return weights_.begin(); }
  [[nodiscard]] auto end() const noexcept { return weights_.end(); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

/**
 * @brief A batch of sampled weight vectors, plus the seed that produced it.
 *
 * seed() is 0 for sets given explicitly (e.g. loaded from a file).
 */
class WeightSampleSet {
 public:
  explicit WeightSampleSet(std::vector<WeightVector> samples, std::uint64_t seed = 0);

  [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] const std::vector<WeightVector>& samples() const noexcept { return samples_; }
  [[nodiscard]] const WeightVector& operator[](std::size_t i) const noexcept {
    return samples_[i];
  }

 private:
  std::vector<WeightVector> samples_;
  std::size_t dimension_;
  std::uint64_t seed_;
};

/**
 * @brief count i.i.d. draws from the uniform distribution on the
 * (dimension-1)-simplex, generated as normalised unit-exponential draws.
 *
 * Deterministic given the seed. Requires dimension >= 2.
 */
[[nodiscard]] WeightSampleSet sample_weights(std::size_t dimension, std::size_t count,
                                             std::uint64_t seed);

/**
 * @brief Simplex-lattice design: every weight vector with entries i/divisions
 * summing to 1, enumerated in lexicographic order.
 *
 * Produces C(divisions + dimension - 1, dimension - 1) vectors.
 */
[[nodiscard]] WeightSampleSet weight_grid(std::size_t dimension, std::size_t divisions);

}  // namespace nmetrics

#endif  // NMETRICS_WEIGHTS_HPP
