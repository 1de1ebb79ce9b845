#ifndef NMETRICS_SWEEP_HPP
#define NMETRICS_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nmetrics/front.hpp"
#include "nmetrics/types.hpp"
#include "nmetrics/weights.hpp"

namespace nmetrics {

/**
 * @brief Configuration of the noise-sweep experiment.
 *
 * For every eta value and replication, a synthetic front is generated, its
 * true solution qualities are disturbed by uniform noise in [-eta, eta]^2,
 * and all metrics are computed on the same solution set with one shared
 * weight sample set. Classical metrics (R2, R2c, IGD+) are evaluated on the
 * estimated values; their noise-aware counterparts select on estimated
 * values and score on true values.
 */
struct ExperimentConfig {
  std::vector<double> eta_values{0.01, 0.05, 0.1, 0.2};
  std::size_t replications = 100;
  std::size_t n_solutions = 30;
  std::size_t m_weights = 1000;
  std::size_t reference_set_size = 50;
  std::uint64_t base_seed = 1;
  bool include_linear = true;
  bool include_chebycheff = true;
  double front_scale = 1.0;
  bool concave_front = false;
};

/// Throws config_error naming the offending field.
void validate(const ExperimentConfig& config);

/// Raw metric values of one (eta, replication) cell. Chebycheff / linear
/// entries are NaN when the corresponding utility kind is excluded.
struct CellMetrics {
  double r2 = 0.0;
  double nr2 = 0.0;
  double r2c = 0.0;
  double nr2c = 0.0;
  double igd_plus = 0.0;
  double nigd_plus = 0.0;
  double misinformation = 0.0;
  double nondominated_fraction = 0.0;
};

/// The data one cell is computed from: the noisy solution set, the reference
/// targets, and the shared weight sample set.
struct CellInstance {
  SolutionSet set;
  ReferenceSet reference;
  WeightSampleSet weights;
};

/**
 * @brief Materialises the instance behind one (eta, replication) cell.
 *
 * Seeds are derived per stream: the weight sample set from the base seed
 * alone (shared by every cell), the front from (base seed, replication) so
 * that replications are coupled across eta values, and the noise draw from
 * (base seed, eta index, replication). The instance therefore depends only
 * on the configuration and the two indices, never on iteration order.
 */
[[nodiscard]] CellInstance cell_instance(const ExperimentConfig& config, std::size_t eta_index,
                                         std::size_t replication);

/// Computes one cell of the report in isolation.
[[nodiscard]] CellMetrics run_cell(const ExperimentConfig& config, std::size_t eta_index,
                                   std::size_t replication);

struct ColumnStat {
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation, 0 for one replication
};

struct SweepRow {
  double eta = 0.0;
  ColumnStat r2, nr2, r2c, nr2c, igd_plus, nigd_plus, misinformation, nondominated_fraction;
};

/// Rows ordered by eta, exactly as configured.
struct MetricReport {
  ExperimentConfig config;
  std::vector<SweepRow> rows;
};

[[nodiscard]] MetricReport run_noise_sweep(const ExperimentConfig& config);

/// CSV with one row per eta and mean/std columns per metric. Full-precision
/// round-trip number formatting: identical configs give byte-identical CSVs.
void write_report_csv(const MetricReport& report, std::ostream& out);

/// The same report as a JSON document (string form).
[[nodiscard]] std::string report_to_json(const MetricReport& report);

}  // namespace nmetrics

#endif  // NMETRICS_SWEEP_HPP
