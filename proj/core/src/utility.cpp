#include "nmetrics/utility.hpp"

#include <algorithm>
#include <utility>

namespace nmetrics {

double utility(const UtilityModel& model, const ObjectiveVector& f, const WeightVector& weights) {
  if (f.dimension() != weights.dimension()) {
    throw dimension_error("utility: objective/weight dimension mismatch");
  }
  if (model.kind == UtilityKind::Linear) {
    double sum = 0.0;
    for (std::size_t k = 0; k < f.dimension(); ++k) {
      sum += weights[k] * f[k];
    }
    return sum;
  }
  if (!model.ideal_point) {
    throw invariant_error("Chebycheff utility requires an ideal point");
  }
  const ObjectiveVector& ideal = *model.ideal_point;
  if (ideal.dimension() != f.dimension()) {
    throw dimension_error("utility: ideal point dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < f.dimension(); ++k) {
    const double deviation = std::max(f[k] - ideal[k], 0.0);
    worst = std::max(worst, weights[k] * deviation);
  }
  return worst;
}

ObjectiveVector componentwise_min(std::span<const ObjectiveVector> points) {
  if (points.empty()) {
    throw invariant_error("componentwise_min: empty point list");
  }
  std::vector<double> mins = points.front().values();
  for (const ObjectiveVector& p : points.subspan(1)) {
    if (p.dimension() != mins.size()) {
      throw dimension_error("componentwise_min: dimension mismatch");
    }
    for (std::size_t k = 0; k < mins.size(); ++k) {
      mins[k] = std::min(mins[k], p[k]);
    }
  }
  return ObjectiveVector(std::move(mins));
}

UtilityModel with_default_ideal_point(UtilityModel model, std::span<const ObjectiveVector> points) {
  if (model.kind != UtilityKind::Chebycheff || model.ideal_point) {
    return model;
  }
  std::vector<double> ideal = componentwise_min(points).values();
  for (double& v : ideal) {
    v -= kIdealPointMargin;
  }
  model.ideal_point = ObjectiveVector(std::move(ideal));
  return model;
}

}  // namespace nmetrics
