#include "nmetrics/front.hpp"

#include <cmath>

#include "nmetrics/rng.hpp"

namespace nmetrics {

namespace {

// Front parametrisation on [0, 1] chosen so u = 0 maps to (0, 1) and u = 1
// to (1, 0), with points evenly spread along the curve.
void unit_front_point(double u, bool concave, double& f1, double& f2) {
  if (concave) {
    f1 = u;
    f2 = 1.0 - u * u;
  } else {
    f1 = u * u;
    f2 = 1.0 - u;
  }
}

}  // namespace

GeneratedFront generate_test_front(std::size_t n, std::uint64_t seed, const FrontParams& params) {
  if (n < 2) {
    throw invariant_error("generate_test_front requires n >= 2");
  }
  if (params.reference_size < 2) {
    throw invariant_error("generate_test_front requires reference_size >= 2");
  }
  if (!(params.scale > 0.0)) {
    throw invariant_error("generate_test_front requires scale > 0");
  }
  if (params.off_front_fraction < 0.0 || params.off_front_fraction > 1.0) {
    throw invariant_error("off_front_fraction must lie in [0, 1]");
  }
  if (params.max_offset < 0.0) {
    throw invariant_error("max_offset must be non-negative");
  }

  std::mt19937_64 gen(seed);
  std::vector<std::string> ids;
  std::vector<ObjectiveVector> truths;
  ids.reserve(n);
  truths.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double f1 = 0.0;
    double f2 = 0.0;
    unit_front_point(uniform01(gen), params.concave, f1, f2);
    if (uniform01(gen) < params.off_front_fraction) {
      f1 += uniform_in(gen, 0.0, params.max_offset);
      f2 += uniform_in(gen, 0.0, params.max_offset);
    }
    ids.push_back("s" + std::to_string(i));
    truths.push_back(ObjectiveVector{f1 * params.scale, f2 * params.scale});
  }

  std::vector<ObjectiveVector> targets;
  targets.reserve(params.reference_size);
  for (std::size_t i = 0; i < params.reference_size; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(params.reference_size - 1);
    double f1 = 0.0;
    double f2 = 0.0;
    unit_front_point(u, params.concave, f1, f2);
    targets.push_back(ObjectiveVector{f1 * params.scale, f2 * params.scale});
  }

  return GeneratedFront{std::move(ids), std::move(truths), ReferenceSet(std::move(targets))};
}

}  // namespace nmetrics
