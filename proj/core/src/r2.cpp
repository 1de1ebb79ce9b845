#include "nmetrics/r2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace nmetrics {

namespace {

void check_r2_inputs(std::size_t dimension, const WeightSampleSet& weights) {
  if (weights.dimension() != dimension) {
    throw dimension_error("r2: weight dimension differs from objective dimension");
  }
}

UtilityModel resolve_for_values(const UtilityModel& model,
                                std::span<const ObjectiveVector> values) {
  for (const ObjectiveVector& v : values) {
    if (v.dimension() != values.front().dimension()) {
      throw dimension_error("r2: objective vectors must share one dimension");
    }
  }
  return with_default_ideal_point(model, values);
}

UtilityModel resolve_for_set(const UtilityModel& model, const SolutionSet& set) {
  if (model.kind != UtilityKind::Chebycheff || model.ideal_point) {
    return model;
  }
  // Default ideal spans both the true and the estimated values of the set.
  std::vector<ObjectiveVector> all = set.true_values();
  const std::vector<ObjectiveVector> estimates = set.estimated_values();
  all.insert(all.end(), estimates.begin(), estimates.end());
  return with_default_ideal_point(model, all);
}

}  // namespace

R2Result r2(std::span<const ObjectiveVector> values, const WeightSampleSet& weights,
            const UtilityModel& model) {
  if (values.empty()) {
    throw invariant_error("r2: empty value list");
  }
  check_r2_inputs(values.front().dimension(), weights);
  const UtilityModel resolved = resolve_for_values(model, values);

  R2Result result;
  result.per_sample.reserve(weights.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const WeightVector& w = weights[i];
    std::size_t best = 0;
    double best_utility = utility(resolved, values[0], w);
    for (std::size_t j = 1; j < values.size(); ++j) {
      const double u = utility(resolved, values[j], w);
      if (u < best_utility) {
        best_utility = u;
        best = j;
      }
    }
    result.per_sample.push_back(R2SampleRecord{i, best, best_utility});
    sum += best_utility;
  }
  result.value = sum / static_cast<double>(weights.size());
  return result;
}

R2Result n_r2(const SolutionSet& set, const WeightSampleSet& weights, const UtilityModel& model) {
  check_r2_inputs(set.dimension(), weights);
  const UtilityModel resolved = resolve_for_set(model, set);
  const std::vector<EvaluatedSolution>& solutions = set.solutions();

  R2Result result;
  result.per_sample.reserve(weights.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const WeightVector& w = weights[i];
    std::size_t picked = 0;
    double best_perceived = utility(resolved, solutions[0].estimated_values, w);
    for (std::size_t j = 1; j < solutions.size(); ++j) {
      const double u = utility(resolved, solutions[j].estimated_values, w);
      if (u < best_perceived) {
        best_perceived = u;
        picked = j;
      }
    }
    const double realised = utility(resolved, solutions[picked].true_values, w);
    result.per_sample.push_back(R2SampleRecord{i, picked, realised});
    sum += realised;
  }
  result.value = sum / static_cast<double>(weights.size());
  return result;
}

namespace {

// Utility line of one point: value(lambda) = slope * lambda + intercept,
// with slope = f1 - f2 and intercept = f2.
struct UtilityLine {
  double slope;
  double intercept;
  std::size_t point_index;
};

// x-coordinate ordering of intersections, by cross-multiplication. With
// a.slope > b.slope and a.slope > c.slope, returns whether the (a, c)
// intersection lies at or left of the (a, b) one.
bool cuts_before(const UtilityLine& a, const UtilityLine& b, const UtilityLine& c) {
  return (c.intercept - a.intercept) * (a.slope - b.slope) <=
         (b.intercept - a.intercept) * (a.slope - c.slope);
}

double intersection_x(const UtilityLine& a, const UtilityLine& b) {
  return (b.intercept - a.intercept) / (a.slope - b.slope);
}

}  // namespace

std::vector<EnvelopeSegment> linear_utility_envelope_2d(std::span<const ObjectiveVector> values) {
  if (values.empty()) {
    throw invariant_error("linear_utility_envelope_2d: empty value list");
  }
  for (const ObjectiveVector& v : values) {
    if (v.dimension() != 2) {
      throw dimension_error("linear_utility_envelope_2d requires two objectives");
    }
  }

  std::vector<UtilityLine> lines;
  lines.reserve(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    lines.push_back(UtilityLine{values[j][0] - values[j][1], values[j][1], j});
  }
  // Decreasing slope so the envelope is traversed left to right; among equal
  // slopes the lowest intercept survives, and coincident lines keep the
  // lowest input index.
  std::sort(lines.begin(), lines.end(), [](const UtilityLine& a, const UtilityLine& b) {
    if (a.slope != b.slope) return a.slope > b.slope;
    if (a.intercept != b.intercept) return a.intercept < b.intercept;
    return a.point_index < b.point_index;
  });

  std::vector<UtilityLine> hull;
  hull.reserve(lines.size());
  for (const UtilityLine& line : lines) {
    if (!hull.empty() && hull.back().slope == line.slope) {
      continue;  // higher (or coincident) parallel line, never minimal
    }
    while (hull.size() >= 2 && cuts_before(hull[hull.size() - 2], hull.back(), line)) {
      hull.pop_back();
    }
    // A single stacked line is replaced when the newcomer is nowhere above it.
    while (hull.size() == 1 && line.intercept <= hull.back().intercept) {
      hull.pop_back();
    }
    hull.push_back(line);
  }

  std::vector<EnvelopeSegment> segments;
  segments.reserve(hull.size());
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const double begin = i == 0 ? 0.0 : std::max(0.0, intersection_x(hull[i - 1], hull[i]));
    const double end = i + 1 == hull.size()
                           ? 1.0
                           : std::min(1.0, intersection_x(hull[i], hull[i + 1]));
    if (end > begin) {
      segments.push_back(EnvelopeSegment{hull[i].point_index, begin, end});
    }
  }
  return segments;
}

double analytic_r2_linear_2d(std::span<const ObjectiveVector> values) {
  const std::vector<EnvelopeSegment> segments = linear_utility_envelope_2d(values);
  double integral = 0.0;
  for (const EnvelopeSegment& seg : segments) {
    const double slope = values[seg.point_index][0] - values[seg.point_index][1];
    const double intercept = values[seg.point_index][1];
    integral += 0.5 * slope * (seg.lambda_end * seg.lambda_end - seg.lambda_begin * seg.lambda_begin) +
                intercept * (seg.lambda_end - seg.lambda_begin);
  }
  return integral;
}

}  // namespace nmetrics
