#include "nmetrics/weights.hpp"

#include <cmath>
#include <utility>

#include "nmetrics/rng.hpp"

namespace nmetrics {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw invariant_error("weight vector must have at least one entry");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) {  // also rejects NaN
      throw invariant_error("weight entries must be non-negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw invariant_error("weight entries must sum to 1");
  }
}

WeightVector::WeightVector(std::initializer_list<double> weights)
    : WeightVector(std::vector<double>(weights)) {}

WeightSampleSet::WeightSampleSet(std::vector<WeightVector> samples, std::uint64_t seed)
    : samples_(std::move(samples)), dimension_(0), seed_(seed) {
  if (samples_.empty()) {
    throw invariant_error("weight sample set must contain at least one vector");
  }
  dimension_ = samples_.front().dimension();
  for (const WeightVector& w : samples_) {
    if (w.dimension() != dimension_) {
      throw dimension_error("weight samples must share one dimension");
    }
  }
}

WeightSampleSet sample_weights(std::size_t dimension, std::size_t count, std::uint64_t seed) {
  if (dimension < 2) {
    throw invariant_error("sample_weights requires dimension >= 2");
  }
  if (count < 1) {
    throw invariant_error("sample_weights requires count >= 1");
  }
  std::mt19937_64 gen(seed);
  std::vector<WeightVector> samples;
  samples.reserve(count);
  std::vector<double> draw(dimension);
  for (std::size_t i = 0; i < count; ++i) {
    double total = 0.0;
    do {
      total = 0.0;
      for (std::size_t k = 0; k < dimension; ++k) {
        draw[k] = -std::log(1.0 - uniform01(gen));  // unit exponential
        total += draw[k];
      }
    } while (total == 0.0);
    std::vector<double> weights(dimension);
    for (std::size_t k = 0; k < dimension; ++k) {
      weights[k] = draw[k] / total;
    }
    samples.emplace_back(std::move(weights));
  }
  return WeightSampleSet(std::move(samples), seed);
}

namespace {

void enumerate_lattice(std::size_t remaining_slots, std::size_t remaining_units,
                       std::size_t divisions, std::vector<std::size_t>& prefix,
                       std::vector<WeightVector>& out) {
  if (remaining_slots == 1) {
    prefix.push_back(remaining_units);
    std::vector<double> weights(prefix.size());
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      weights[k] = static_cast<double>(prefix[k]) / static_cast<double>(divisions);
    }
    out.emplace_back(std::move(weights));
    prefix.pop_back();
    return;
  }
  for (std::size_t units = 0; units <= remaining_units; ++units) {
    prefix.push_back(units);
    enumerate_lattice(remaining_slots - 1, remaining_units - units, divisions, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

WeightSampleSet weight_grid(std::size_t dimension, std::size_t divisions) {
  if (dimension < 2) {
    throw invariant_error("weight_grid requires dimension >= 2");
  }
  if (divisions < 1) {
    throw invariant_error("weight_grid requires divisions >= 1");
  }
  std::vector<WeightVector> samples;
  std::vector<std::size_t> prefix;
  enumerate_lattice(dimension, divisions, divisions, prefix, samples);
  return WeightSampleSet(std::move(samples), 0);
}

}  // namespace nmetrics
