#include "nmetrics/figure_data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nmetrics/igd.hpp"
#include "nmetrics/io.hpp"
#include "nmetrics/r2.hpp"
#include "nmetrics/utility.hpp"

namespace nmetrics {

namespace {

void append_vector(std::ostream& out, const ObjectiveVector& v) {
  for (std::size_t k = 0; k < v.dimension(); ++k) {
    out << ',' << format_double(v[k]);
  }
}

void header_group(std::ostream& out, const char* prefix, std::size_t dimension) {
  for (std::size_t k = 1; k <= dimension; ++k) {
    out << ',' << prefix << k;
  }
}

}  // namespace

void export_figure_data(const SolutionSet& set, const ReferenceSet& reference,
                        const WeightSampleSet& weights, const std::filesystem::path& directory,
                        std::optional<ObjectiveVector> ideal_point) {
  if (set.dimension() != reference.dimension()) {
    throw dimension_error("export_figure_data: solution/reference dimension mismatch");
  }
  if (weights.dimension() != set.dimension()) {
    throw dimension_error("export_figure_data: weight dimension mismatch");
  }
  std::filesystem::create_directories(directory);
  const std::size_t dimension = set.dimension();
  const std::vector<ObjectiveVector> estimates = set.estimated_values();

  UtilityModel chebycheff{UtilityKind::Chebycheff, std::move(ideal_point)};
  if (!chebycheff.ideal_point) {
    std::vector<ObjectiveVector> all = set.true_values();
    all.insert(all.end(), estimates.begin(), estimates.end());
    const std::vector<ObjectiveVector>& targets = reference.targets();
    all.insert(all.end(), targets.begin(), targets.end());
    chebycheff = with_default_ideal_point(std::move(chebycheff), all);
  }
  const ObjectiveVector& ideal = *chebycheff.ideal_point;
  const UtilityModel linear{UtilityKind::Linear, {}};

  nlohmann::json manifest;
  manifest["artefacts"] = nlohmann::json::array();
  const auto add_artefact = [&](const char* name, const char* file, const char* description) {
    manifest["artefacts"].push_back(
        {{"name", name}, {"file", file}, {"description", description}});
  };

  // Paired true/estimated points; the pairs are the connecting segments.
  {
    std::ostringstream out;
    out << "id";
    header_group(out, "t", dimension);
    header_group(out, "r", dimension);
    out << ",segment_length\n";
    for (const EvaluatedSolution& s : set.solutions()) {
      out << s.id;
      append_vector(out, s.true_values);
      append_vector(out, s.estimated_values);
      out << ',' << format_double(euclidean_distance(s.true_values, s.estimated_values)) << '\n';
    }
    write_text_atomic(directory / "points.csv", out.str());
    add_artefact("points", "points.csv",
                 "true and estimated objective vectors with segment lengths");
  }

  // Linear-utility selections, straight from the noise-aware R2 records.
  {
    const R2Result noisy = n_r2(set, weights, linear);
    std::ostringstream out;
    out << "weight_index";
    header_group(out, "l", dimension);
    out << ",selected_id,estimated_utility,true_utility\n";
    for (const R2SampleRecord& record : noisy.per_sample) {
      const WeightVector& w = weights[record.weight_index];
      const EvaluatedSolution& s = set[record.solution_index];
      out << record.weight_index;
      for (std::size_t k = 0; k < dimension; ++k) {
        out << ',' << format_double(w[k]);
      }
      out << ',' << s.id << ',' << format_double(utility(linear, s.estimated_values, w)) << ','
          << format_double(record.utility) << '\n';
    }
    write_text_atomic(directory / "r2_linear_selection.csv", out.str());
    add_artefact("r2_linear_selection", "r2_linear_selection.csv",
                 "per weight vector: solution selected by estimated linear utility");
  }

  // Lower envelope of the estimated values (two objectives only): the weight
  // range favouring each solution, with the indifference-line direction at
  // the range midpoint.
  if (dimension == 2) {
    const std::vector<EnvelopeSegment> segments = linear_utility_envelope_2d(estimates);
    std::ostringstream out;
    out << "segment_index,solution_id,lambda_begin,lambda_end,lambda_mid,normal_l1,normal_l2,"
           "r1,r2\n";
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const EnvelopeSegment& seg = segments[i];
      const EvaluatedSolution& s = set[seg.point_index];
      const double mid = 0.5 * (seg.lambda_begin + seg.lambda_end);
      out << i << ',' << s.id << ',' << format_double(seg.lambda_begin) << ','
          << format_double(seg.lambda_end) << ',' << format_double(mid) << ','
          << format_double(mid) << ',' << format_double(1.0 - mid);
      append_vector(out, s.estimated_values);
      out << '\n';
    }
    write_text_atomic(directory / "r2_hull_segments.csv", out.str());
    add_artefact("r2_hull_segments", "r2_hull_segments.csv",
                 "lower envelope of estimated values with favouring weight ranges");
  }

  // Chebycheff rays from the ideal point, one per weight vector, with the
  // estimated-utility selection.
  {
    const R2Result noisy = n_r2(set, weights, chebycheff);
    std::ostringstream out;
    out << "weight_index";
    header_group(out, "l", dimension);
    header_group(out, "z", dimension);
    header_group(out, "dir", dimension);
    out << ",selected_id,estimated_utility,true_utility\n";
    for (const R2SampleRecord& record : noisy.per_sample) {
      const WeightVector& w = weights[record.weight_index];
      const EvaluatedSolution& s = set[record.solution_index];
      out << record.weight_index;
      for (std::size_t k = 0; k < dimension; ++k) {
        out << ',' << format_double(w[k]);
      }
      append_vector(out, ideal);
      // Equal-utility corner direction; near-zero weights are clamped so the
      // ray stays representable.
      double norm = 0.0;
      std::vector<double> dir(dimension);
      for (std::size_t k = 0; k < dimension; ++k) {
        dir[k] = 1.0 / std::max(w[k], 1e-9);
        norm += dir[k] * dir[k];
      }
      norm = std::sqrt(norm);
      for (std::size_t k = 0; k < dimension; ++k) {
        out << ',' << format_double(dir[k] / norm);
      }
      out << ',' << s.id << ',' << format_double(utility(chebycheff, s.estimated_values, w))
          << ',' << format_double(record.utility) << '\n';
    }
    write_text_atomic(directory / "chebycheff_rays.csv", out.str());
    add_artefact("chebycheff_rays", "chebycheff_rays.csv",
                 "per weight vector: ideal-point ray and the selected solution");
  }

  // Target-to-solution matchings: classical (estimated values only) and
  // noisy (estimated-value matching, true-value scoring).
  {
    const IGDResult classical = igd_plus(estimates, reference);
    std::ostringstream out;
    out << "target_index";
    header_group(out, "a", dimension);
    out << ",selected_id";
    header_group(out, "r", dimension);
    out << ",distance_euclidean,distance_igdplus\n";
    for (const IGDTargetRecord& record : classical.per_target) {
      const ObjectiveVector& target = reference[record.target_index];
      const EvaluatedSolution& s = set[record.solution_index];
      out << record.target_index;
      append_vector(out, target);
      out << ',' << s.id;
      append_vector(out, s.estimated_values);
      out << ',' << format_double(euclidean_distance(target, s.estimated_values)) << ','
          << format_double(record.distance) << '\n';
    }
    write_text_atomic(directory / "igd_matching.csv", out.str());
    add_artefact("igd_matching", "igd_matching.csv",
                 "per reference target: nearest estimated solution");
  }
  {
    const IGDResult noisy = n_igd_plus(set, reference);
    std::ostringstream out;
    out << "target_index";
    header_group(out, "a", dimension);
    out << ",selected_id";
    header_group(out, "t", dimension);
    out << ",distance_euclidean,distance_igdplus\n";
    for (const IGDTargetRecord& record : noisy.per_target) {
      const ObjectiveVector& target = reference[record.target_index];
      const EvaluatedSolution& s = set[record.solution_index];
      out << record.target_index;
      append_vector(out, target);
      out << ',' << s.id;
      append_vector(out, s.true_values);
      out << ',' << format_double(euclidean_distance(target, s.true_values)) << ','
          << format_double(record.distance) << '\n';
    }
    write_text_atomic(directory / "nigd_matching.csv", out.str());
    add_artefact("nigd_matching", "nigd_matching.csv",
                 "per reference target: solution matched on estimates, scored on true values");
  }

  write_text_atomic(directory / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace nmetrics
