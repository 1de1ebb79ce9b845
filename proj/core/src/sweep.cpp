#include "nmetrics/sweep.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "nmetrics/diagnostics.hpp"
#include "nmetrics/dominance.hpp"
#include "nmetrics/igd.hpp"
#include "nmetrics/io.hpp"
#include "nmetrics/noise.hpp"
#include "nmetrics/r2.hpp"
#include "nmetrics/rng.hpp"
#include "nmetrics/utility.hpp"

namespace nmetrics {

namespace {

// Seed-stream tags; see run_cell's contract.
constexpr std::uint64_t kWeightStream = 0x77;
constexpr std::uint64_t kFrontStream = 0xF0;
constexpr std::uint64_t kNoiseStream = 0xA0;

constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.eta_values.empty()) {
    throw config_error("eta_values: must not be empty");
  }
  double previous = -1.0;
  for (double eta : config.eta_values) {
    if (!(eta >= 0.0)) {
      throw config_error("eta_values: entries must be non-negative");
    }
    if (eta <= previous) {
      throw config_error("eta_values: entries must be strictly increasing");
    }
    previous = eta;
  }
  if (config.replications < 1) {
    throw config_error("replications: must be >= 1");
  }
  if (config.n_solutions < 2) {
    throw config_error("n_solutions: must be >= 2");
  }
  if (config.m_weights < 1) {
    throw config_error("m_weights: must be >= 1");
  }
  if (config.reference_set_size < 2) {
    throw config_error("reference_set_size: must be >= 2");
  }
  if (!config.include_linear && !config.include_chebycheff) {
    throw config_error("utilities: at least one utility kind must be included");
  }
  if (!(config.front_scale > 0.0)) {
    throw config_error("front_scale: must be > 0");
  }
}

CellInstance cell_instance(const ExperimentConfig& config, std::size_t eta_index,
                           std::size_t replication) {
  validate(config);
  if (eta_index >= config.eta_values.size()) {
    throw config_error("eta_values: index out of range");
  }
  if (replication >= config.replications) {
    throw config_error("replications: index out of range");
  }

  WeightSampleSet weights =
      sample_weights(2, config.m_weights, derive_seed(config.base_seed, {kWeightStream}));

  FrontParams front_params;
  front_params.reference_size = config.reference_set_size;
  front_params.scale = config.front_scale;
  front_params.concave = config.concave_front;
  GeneratedFront front = generate_test_front(
      config.n_solutions, derive_seed(config.base_seed, {kFrontStream, replication}),
      front_params);

  NoiseModel noise;
  noise.eta = config.eta_values[eta_index];
  noise.seed = derive_seed(config.base_seed, {kNoiseStream, eta_index, replication});
  std::vector<ObjectiveVector> estimates = apply_noise(front.truths, noise);

  SolutionSet set =
      SolutionSet::from_columns(std::move(front.ids), std::move(front.truths),
                                std::move(estimates));
  return CellInstance{std::move(set), std::move(front.reference), std::move(weights)};
}

CellMetrics run_cell(const ExperimentConfig& config, std::size_t eta_index,
                     std::size_t replication) {
  const CellInstance instance = cell_instance(config, eta_index, replication);
  const SolutionSet& set = instance.set;
  const std::vector<ObjectiveVector> observed = set.estimated_values();

  CellMetrics cell;
  if (config.include_linear) {
    const UtilityModel linear{UtilityKind::Linear, {}};
    cell.r2 = r2(observed, instance.weights, linear).value;
    cell.nr2 = n_r2(set, instance.weights, linear).value;
  } else {
    cell.r2 = kAbsent;
    cell.nr2 = kAbsent;
  }
  if (config.include_chebycheff) {
    // One eta-independent anchor per replication keeps the Chebycheff columns
    // comparable across noise levels: minimum over truths and targets.
    std::vector<ObjectiveVector> anchor_points = set.true_values();
    const std::vector<ObjectiveVector>& targets = instance.reference.targets();
    anchor_points.insert(anchor_points.end(), targets.begin(), targets.end());
    std::vector<double> ideal = componentwise_min(anchor_points).values();
    for (double& v : ideal) {
      v -= kIdealPointMargin;
    }
    const UtilityModel chebycheff{UtilityKind::Chebycheff, ObjectiveVector(std::move(ideal))};
    cell.r2c = r2(observed, instance.weights, chebycheff).value;
    cell.nr2c = n_r2(set, instance.weights, chebycheff).value;
  } else {
    cell.r2c = kAbsent;
    cell.nr2c = kAbsent;
  }
  cell.igd_plus = igd_plus(observed, instance.reference).value;
  cell.nigd_plus = n_igd_plus(set, instance.reference).value;
  cell.misinformation = noise_misinformation(set);
  cell.nondominated_fraction = true_nondominated_fraction(set);
  return cell;
}

namespace {

ColumnStat aggregate(const std::vector<double>& values) {
  if (!values.empty() && std::isnan(values.front())) {
    return ColumnStat{kAbsent, kAbsent};
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) {
    return ColumnStat{mean, 0.0};
  }
  double squares = 0.0;
  for (double v : values) {
    squares += (v - mean) * (v - mean);
  }
  return ColumnStat{mean, std::sqrt(squares / static_cast<double>(values.size() - 1))};
}

}  // namespace

MetricReport run_noise_sweep(const ExperimentConfig& config) {
  validate(config);
  MetricReport report;
  report.config = config;
  report.rows.reserve(config.eta_values.size());
  for (std::size_t e = 0; e < config.eta_values.size(); ++e) {
    std::vector<double> r2s, nr2s, r2cs, nr2cs, igds, nigds, misinfos, fractions;
    for (std::size_t rep = 0; rep < config.replications; ++rep) {
      CellMetrics cell;
      try {
        cell = run_cell(config, e, rep);
      } catch (const std::exception& ex) {
        throw std::runtime_error("noise sweep failed at eta=" +
                                 format_double(config.eta_values[e]) + ", replication=" +
                                 std::to_string(rep) + ": " + ex.what());
      }
      r2s.push_back(cell.r2);
      nr2s.push_back(cell.nr2);
      r2cs.push_back(cell.r2c);
      nr2cs.push_back(cell.nr2c);
      igds.push_back(cell.igd_plus);
      nigds.push_back(cell.nigd_plus);
      misinfos.push_back(cell.misinformation);
      fractions.push_back(cell.nondominated_fraction);
    }
    SweepRow row;
    row.eta = config.eta_values[e];
    row.r2 = aggregate(r2s);
    row.nr2 = aggregate(nr2s);
    row.r2c = aggregate(r2cs);
    row.nr2c = aggregate(nr2cs);
    row.igd_plus = aggregate(igds);
    row.nigd_plus = aggregate(nigds);
    row.misinformation = aggregate(misinfos);
    row.nondominated_fraction = aggregate(fractions);
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

struct NamedColumn {
  const char* name;
  ColumnStat SweepRow::* member;
  bool ExperimentConfig::* enabled;  // nullptr = always present
};

constexpr NamedColumn kColumns[] = {
    {"r2", &SweepRow::r2, &ExperimentConfig::include_linear},
    {"nr2", &SweepRow::nr2, &ExperimentConfig::include_linear},
    {"r2c", &SweepRow::r2c, &ExperimentConfig::include_chebycheff},
    {"nr2c", &SweepRow::nr2c, &ExperimentConfig::include_chebycheff},
    {"igdplus", &SweepRow::igd_plus, nullptr},
    {"nigdplus", &SweepRow::nigd_plus, nullptr},
    {"misinfo", &SweepRow::misinformation, nullptr},
    {"ndfrac", &SweepRow::nondominated_fraction, nullptr},
};

bool column_present(const NamedColumn& column, const ExperimentConfig& config) {
  return column.enabled == nullptr || config.*(column.enabled);
}

}  // namespace

void write_report_csv(const MetricReport& report, std::ostream& out) {
  out << "eta";
  for (const NamedColumn& column : kColumns) {
    if (column_present(column, report.config)) {
      out << ',' << column.name << "_mean," << column.name << "_std";
    }
  }
  out << '\n';
  for (const SweepRow& row : report.rows) {
    out << format_double(row.eta);
    for (const NamedColumn& column : kColumns) {
      if (column_present(column, report.config)) {
        const ColumnStat& stat = row.*(column.member);
        out << ',' << format_double(stat.mean) << ',' << format_double(stat.stddev);
      }
    }
    out << '\n';
  }
}

std::string report_to_json(const MetricReport& report) {
  nlohmann::json doc;
  const ExperimentConfig& config = report.config;
  doc["config"] = {
      {"eta_values", config.eta_values},
      {"replications", config.replications},
      {"n_solutions", config.n_solutions},
      {"m_weights", config.m_weights},
      {"reference_set_size", config.reference_set_size},
      {"base_seed", config.base_seed},
      {"front_scale", config.front_scale},
      {"concave_front", config.concave_front},
  };
  nlohmann::json utilities = nlohmann::json::array();
  if (config.include_linear) {
    utilities.push_back("linear");
  }
  if (config.include_chebycheff) {
    utilities.push_back("chebycheff");
  }
  doc["config"]["utilities"] = utilities;

  doc["rows"] = nlohmann::json::array();
  for (const SweepRow& row : report.rows) {
    nlohmann::json row_json;
    row_json["eta"] = row.eta;
    for (const NamedColumn& column : kColumns) {
      if (column_present(column, config)) {
        const ColumnStat& stat = row.*(column.member);
        row_json[column.name] = {{"mean", stat.mean}, {"stddev", stat.stddev}};
      }
    }
    doc["rows"].push_back(std::move(row_json));
  }
  return doc.dump(2);
}

}  // namespace nmetrics
