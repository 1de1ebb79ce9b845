// Command-line front end: metric computation, noise diagnostics, the noise
// sweep, figure-data export, and input validation.
//
// Exit codes: 0 success, 1 parse failures, 2 dimension/usage errors,
// 3 invariant violations.

#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nmetrics/diagnostics.hpp"
#include "nmetrics/dominance.hpp"
#include "nmetrics/figure_data.hpp"
#include "nmetrics/igd.hpp"
#include "nmetrics/io.hpp"
#include "nmetrics/r2.hpp"
#include "nmetrics/sweep.hpp"
#include "nmetrics/types.hpp"
#include "nmetrics/utility.hpp"
#include "nmetrics/weights.hpp"

using namespace nmetrics;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitDimension = 2;
constexpr int kExitInvariant = 3;

int run_guarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDimension;  // bad configuration is a usage error
  } catch (const dimension_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDimension;
  } catch (const invariant_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_atomic(out_path, text);
  }
}

std::string four_decimals(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", v);
  return buffer;
}

// Shared flags of the metric-facing subcommands.
struct DataOptions {
  std::string solutions_path;
  std::string reference_path;
  std::string weights_path;
  std::string dump_weights_path;
  std::string utility_kind = "linear";
  std::size_t weights_m = 10000;
  std::uint64_t seed = 1;
};

void add_weight_flags(CLI::App* cmd, DataOptions& options, std::size_t default_m) {
  options.weights_m = default_m;
  cmd->add_option("--weights-m", options.weights_m,
                  "number of weight vectors to sample (default " + std::to_string(default_m) +
                      ")");
  cmd->add_option("--weights-file", options.weights_path,
                  "CSV of weight vectors (l1..lD); overrides sampling");
  cmd->add_option("--dump-weights", options.dump_weights_path,
                  "write the weight vectors actually used to this CSV for bit-exact replay");
  cmd->add_option("--seed", options.seed, "seed for weight sampling (default 1)");
  cmd->add_option("--utility", options.utility_kind, "utility family")
      ->check(CLI::IsMember({"linear", "chebycheff"}));
}

struct LoadedData {
  SolutionSet set;
  std::optional<ReferenceSet> reference;
  WeightSampleSet weights;
  UtilityModel model;
};

LoadedData load_data(const DataOptions& options) {
  SolutionSet set = read_solution_set(options.solutions_path);
  std::optional<ReferenceSet> reference;
  if (!options.reference_path.empty()) {
    reference = read_reference_set(options.reference_path);
    if (reference->dimension() != set.dimension()) {
      throw dimension_error("reference dimension " + std::to_string(reference->dimension()) +
                            " does not match solution dimension " +
                            std::to_string(set.dimension()));
    }
  }
  WeightSampleSet weights = options.weights_path.empty()
                                ? sample_weights(set.dimension(), options.weights_m, options.seed)
                                : read_weights(options.weights_path);
  if (weights.dimension() != set.dimension()) {
    throw dimension_error("weight dimension " + std::to_string(weights.dimension()) +
                          " does not match solution dimension " +
                          std::to_string(set.dimension()));
  }
  if (!options.dump_weights_path.empty()) {
    std::ostringstream out;
    write_weights_csv(weights, out);
    write_text_atomic(options.dump_weights_path, out.str());
  }

  UtilityModel model;
  if (options.utility_kind == "chebycheff") {
    model.kind = UtilityKind::Chebycheff;
    // One ideal point per invocation, spanning everything in sight, so that
    // classical and noise-aware values are directly comparable.
    std::vector<ObjectiveVector> all = set.true_values();
    const std::vector<ObjectiveVector> estimates = set.estimated_values();
    all.insert(all.end(), estimates.begin(), estimates.end());
    if (reference) {
      const std::vector<ObjectiveVector>& targets = reference->targets();
      all.insert(all.end(), targets.begin(), targets.end());
    }
    model = with_default_ideal_point(std::move(model), all);
  }
  return LoadedData{std::move(set), std::move(reference), std::move(weights), std::move(model)};
}

// ---------------------------------------------------------------------------
// compute

struct ComputeOptions : DataOptions {
  std::string metrics = "all";
  std::string on = "true";
  std::string normalise = "sum";
  std::string selection = "euclidean";
  std::string format = "table";
  std::string out_path;
  bool audit_ties = false;
};

const std::vector<std::string> kMetricOrder = {"r2",    "nr2",   "igd",     "igd+",
                                               "nigd",  "nigd+", "misinfo", "ndfrac"};

bool is_igd_family(const std::string& metric) {
  return metric == "igd" || metric == "igd+" || metric == "nigd" || metric == "nigd+";
}

std::vector<std::string> parse_metric_list(const std::string& text, bool have_reference) {
  std::vector<std::string> requested;
  std::stringstream stream(text);
  std::string token;
  bool all = false;
  while (std::getline(stream, token, ',')) {
    if (token == "all") {
      all = true;
    } else if (std::find(kMetricOrder.begin(), kMetricOrder.end(), token) ==
               kMetricOrder.end()) {
      throw config_error("unknown metric '" + token + "'");
    } else {
      requested.push_back(token);
    }
  }
  if (all) {
    for (const std::string& metric : kMetricOrder) {
      if (is_igd_family(metric) && !have_reference) {
        continue;  // silently skipped; an explicit request still errors below
      }
      if (std::find(requested.begin(), requested.end(), metric) == requested.end()) {
        requested.push_back(metric);
      }
    }
  }
  if (requested.empty()) {
    throw config_error("no metrics requested");
  }
  // Canonical output order.
  std::vector<std::string> ordered;
  for (const std::string& metric : kMetricOrder) {
    if (std::find(requested.begin(), requested.end(), metric) != requested.end()) {
      ordered.push_back(metric);
    }
  }
  return ordered;
}

// How often the lowest-index tie-break actually engages on the selection
// surfaces the decision maker faces.
struct TieAudit {
  std::size_t tied_weights = 0;
  std::size_t weight_count = 0;
  std::size_t tied_targets = 0;
  std::size_t target_count = 0;
};

TieAudit audit_ties(const LoadedData& data) {
  TieAudit audit;
  audit.weight_count = data.weights.size();
  const std::vector<EvaluatedSolution>& solutions = data.set.solutions();
  for (std::size_t i = 0; i < data.weights.size(); ++i) {
    double best = utility(data.model, solutions[0].estimated_values, data.weights[i]);
    std::size_t holders = 1;
    for (std::size_t j = 1; j < solutions.size(); ++j) {
      const double u = utility(data.model, solutions[j].estimated_values, data.weights[i]);
      if (u < best) {
        best = u;
        holders = 1;
      } else if (u == best) {
        ++holders;
      }
    }
    if (holders > 1) {
      ++audit.tied_weights;
    }
  }
  if (data.reference) {
    audit.target_count = data.reference->size();
    for (std::size_t i = 0; i < data.reference->size(); ++i) {
      const ObjectiveVector& target = (*data.reference)[i];
      double best = euclidean_distance(target, solutions[0].estimated_values);
      std::size_t holders = 1;
      for (std::size_t j = 1; j < solutions.size(); ++j) {
        const double d = euclidean_distance(target, solutions[j].estimated_values);
        if (d < best) {
          best = d;
          holders = 1;
        } else if (d == best) {
          ++holders;
        }
      }
      if (holders > 1) {
        ++audit.tied_targets;
      }
    }
  }
  return audit;
}

std::string metric_label(const std::string& metric) {
  if (metric == "r2") return "R2";
  if (metric == "nr2") return "nR2";
  if (metric == "igd") return "IGD";
  if (metric == "igd+") return "IGD+";
  if (metric == "nigd") return "nIGD";
  if (metric == "nigd+") return "nIGD+";
  if (metric == "misinfo") return "misinformation";
  return "nondominated_fraction";
}

void run_compute(const ComputeOptions& options) {
  const LoadedData data = load_data(options);
  const SolutionSet& set = data.set;
  const std::vector<std::string> metrics =
      parse_metric_list(options.metrics, data.reference.has_value());
  for (const std::string& metric : metrics) {
    if (is_igd_family(metric) && !data.reference) {
      throw dimension_error("--metric " + metric + " requires --reference");
    }
  }
  if (options.metrics == "all" && !data.reference) {
    std::cerr << "note: no --reference given, IGD-family metrics skipped\n";
  }

  IgdOptions igd_options;
  igd_options.normalise = options.normalise == "mean" ? Normalise::Mean : Normalise::Sum;
  igd_options.selection =
      options.selection == "igd+" ? SelectionDistance::IgdPlus : SelectionDistance::Euclidean;
  const std::vector<ObjectiveVector> classical_view =
      options.on == "estimated" ? set.estimated_values() : set.true_values();

  std::vector<std::string> ids;
  for (const EvaluatedSolution& s : set.solutions()) {
    ids.push_back(s.id);
  }

  std::vector<std::pair<std::string, double>> values;
  nlohmann::json details;
  for (const std::string& metric : metrics) {
    if (metric == "r2") {
      const R2Result result = r2(classical_view, data.weights, data.model);
      values.emplace_back(metric, result.value);
      details[metric] = nlohmann::json::parse(r2_result_to_json(result, ids));
    } else if (metric == "nr2") {
      const R2Result result = n_r2(set, data.weights, data.model);
      values.emplace_back(metric, result.value);
      details[metric] = nlohmann::json::parse(r2_result_to_json(result, ids));
    } else if (metric == "igd") {
      const IGDResult result = igd(classical_view, *data.reference, igd_options);
      values.emplace_back(metric, result.value);
      details[metric] = nlohmann::json::parse(igd_result_to_json(result, ids));
    } else if (metric == "igd+") {
      const IGDResult result = igd_plus(classical_view, *data.reference, igd_options);
      values.emplace_back(metric, result.value);
      details[metric] = nlohmann::json::parse(igd_result_to_json(result, ids));
    } else if (metric == "nigd") {
      const IGDResult result = n_igd(set, *data.reference, igd_options);
      values.emplace_back(metric, result.value);
      details[metric] = nlohmann::json::parse(igd_result_to_json(result, ids));
    } else if (metric == "nigd+") {
      const IGDResult result = n_igd_plus(set, *data.reference, igd_options);
      values.emplace_back(metric, result.value);
      details[metric] = nlohmann::json::parse(igd_result_to_json(result, ids));
    } else if (metric == "misinfo") {
      values.emplace_back(metric, noise_misinformation(set));
    } else {
      values.emplace_back(metric, true_nondominated_fraction(set));
    }
  }

  std::string text;
  if (options.format == "table") {
    std::ostringstream out;
    for (const auto& [metric, value] : values) {
      out << metric_label(metric);
      for (std::size_t pad = metric_label(metric).size(); pad < 22; ++pad) {
        out << ' ';
      }
      out << four_decimals(value) << '\n';
    }
    if (options.audit_ties) {
      const TieAudit audit = audit_ties(data);
      out << "tie audit: " << audit.tied_weights << " of " << audit.weight_count
          << " weight selections tied (lowest index wins)\n";
      if (data.reference) {
        out << "tie audit: " << audit.tied_targets << " of " << audit.target_count
            << " target matchings tied (lowest index wins)\n";
      }
    }
    text = out.str();
  } else if (options.format == "csv") {
    std::ostringstream out;
    out << "metric,value\n";
    for (const auto& [metric, value] : values) {
      out << metric_label(metric) << ',' << format_double(value) << '\n';
    }
    text = out.str();
  } else {
    nlohmann::json doc;
    doc["solutions"] = options.solutions_path;
    doc["n"] = set.size();
    doc["dimension"] = set.dimension();
    doc["utility"] = options.utility_kind;
    doc["classical_on"] = options.on;
    doc["metrics"] = nlohmann::json::object();
    for (const auto& [metric, value] : values) {
      doc["metrics"][metric] = value;
    }
    doc["details"] = details;
    if (options.audit_ties) {
      const TieAudit audit = audit_ties(data);
      doc["tie_audit"] = {{"tied_weights", audit.tied_weights},
                          {"weight_count", audit.weight_count}};
      if (data.reference) {
        doc["tie_audit"]["tied_targets"] = audit.tied_targets;
        doc["tie_audit"]["target_count"] = audit.target_count;
      }
    }
    text = doc.dump(2) + "\n";
  }
  emit(text, options.out_path);
}

// ---------------------------------------------------------------------------
// diagnose

struct DiagnoseOptions : DataOptions {
  std::string format = "table";
  std::string out_path;
};

void run_diagnose(const DiagnoseOptions& options) {
  const LoadedData data = load_data(options);
  const ErrorReport report = error_report(data.set, data.weights, data.model);
  std::vector<RegretRecord> distance_regrets;
  if (data.reference) {
    distance_regrets = distance_selection_errors(data.set, *data.reference);
  }

  std::string text;
  if (options.format == "json") {
    nlohmann::json doc = nlohmann::json::parse(error_report_to_json(report));
    if (data.reference) {
      doc["distance_selection_errors"] = nlohmann::json::array();
      double sum = 0.0;
      for (const RegretRecord& r : distance_regrets) {
        doc["distance_selection_errors"].push_back({{"target_index", r.sample_index},
                                                    {"picked_index", r.picked_index},
                                                    {"best_index", r.best_index},
                                                    {"regret", r.regret}});
        sum += r.regret;
      }
      doc["distance_regret_sum"] = sum;
    }
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    const auto join = [](const std::vector<std::string>& ids) {
      if (ids.empty()) return std::string("-");
      std::string joined;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        joined += (i == 0 ? "" : ", ") + ids[i];
      }
      return joined;
    };
    out << "error by exclusion (" << report.excluded_ids.size()
        << "): " << join(report.excluded_ids) << '\n';
    out << "error by inclusion (" << report.included_ids.size()
        << "): " << join(report.included_ids) << '\n';
    out << "selection errors: " << report.selection.size() << " of " << report.sample_count
        << " weight samples\n";
    out << "mean regret: " << four_decimals(report.mean_regret())
        << " (equals nR2 - R2 on true values)\n";
    out << "noise misinformation: " << four_decimals(report.misinformation) << '\n';
    if (data.reference) {
      double sum = 0.0;
      for (const RegretRecord& r : distance_regrets) {
        sum += r.regret;
      }
      out << "distance selection errors: " << distance_regrets.size() << " of "
          << data.reference->size() << " targets, summed regret " << four_decimals(sum) << '\n';
    }
    text = out.str();
  }
  emit(text, options.out_path);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  std::string config_path;
  std::vector<double> eta_values;
  std::size_t replications = 0;
  std::size_t n_solutions = 0;
  std::size_t m_weights = 0;
  std::size_t reference_size = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string utilities;
  double front_scale = 0.0;
  bool concave = false;
  std::string format = "csv";
  std::string out_path;
};

void run_sweep(const SweepOptions& options) {
  ExperimentConfig config;
  if (!options.config_path.empty()) {
    config = read_experiment_config(options.config_path);
  }
  if (!options.eta_values.empty()) config.eta_values = options.eta_values;
  if (options.replications > 0) config.replications = options.replications;
  if (options.n_solutions > 0) config.n_solutions = options.n_solutions;
  if (options.m_weights > 0) config.m_weights = options.m_weights;
  if (options.reference_size > 0) config.reference_set_size = options.reference_size;
  if (options.seed_given) config.base_seed = options.seed;
  if (options.front_scale > 0.0) config.front_scale = options.front_scale;
  if (options.concave) config.concave_front = true;
  if (!options.utilities.empty()) {
    config.include_linear = options.utilities.find("linear") != std::string::npos;
    config.include_chebycheff = options.utilities.find("chebycheff") != std::string::npos;
  }
  validate(config);

  const MetricReport report = run_noise_sweep(config);
  if (options.format == "json") {
    emit(report_to_json(report) + "\n", options.out_path);
  } else {
    std::ostringstream out;
    write_report_csv(report, out);
    emit(out.str(), options.out_path);
  }
}

// ---------------------------------------------------------------------------
// figure-data

struct FigureOptions : DataOptions {
  std::string out_dir;
};

void run_figure_data(const FigureOptions& options) {
  if (options.reference_path.empty()) {
    throw dimension_error("figure-data requires --reference");
  }
  const LoadedData data = load_data(options);
  export_figure_data(data.set, *data.reference, data.weights, options.out_dir,
                     data.model.ideal_point);
  std::cout << "wrote " << (std::filesystem::path(options.out_dir) / "manifest.json").string()
            << '\n';
}

// ---------------------------------------------------------------------------
// validate

struct ValidateOptions {
  std::string solutions_path;
  std::string reference_path;
  std::string weights_path;
};

void run_validate(const ValidateOptions& options) {
  std::optional<SolutionSet> set;
  std::optional<ReferenceSet> reference;
  std::optional<WeightSampleSet> weights;
  if (!options.solutions_path.empty()) {
    set = read_solution_set(options.solutions_path);
    std::cout << "ok: " << options.solutions_path << ": solution set, n=" << set->size()
              << ", dimension=" << set->dimension() << '\n';
  }
  if (!options.reference_path.empty()) {
    reference = read_reference_set(options.reference_path);
    std::cout << "ok: " << options.reference_path
              << ": reference set, m=" << reference->size()
              << ", dimension=" << reference->dimension() << " (mutually non-dominated)\n";
  }
  if (!options.weights_path.empty()) {
    weights = read_weights(options.weights_path);
    std::cout << "ok: " << options.weights_path << ": weight set, m=" << weights->size()
              << ", dimension=" << weights->dimension() << '\n';
  }
  if (set && reference && set->dimension() != reference->dimension()) {
    throw dimension_error("solution dimension " + std::to_string(set->dimension()) +
                          " does not match reference dimension " +
                          std::to_string(reference->dimension()));
  }
  if (set && weights && set->dimension() != weights->dimension()) {
    throw dimension_error("solution dimension " + std::to_string(set->dimension()) +
                          " does not match weight dimension " +
                          std::to_string(weights->dimension()));
  }
  std::cout << "all inputs consistent\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noise-aware quality indicators for multi-objective optimisation"};
  app.require_subcommand(1);

  ComputeOptions compute_options;
  CLI::App* compute = app.add_subcommand(
      "compute", "compute quality indicators for a solution-set file");
  compute->add_option("solutions", compute_options.solutions_path, "solution set (CSV or JSON)")
      ->required();
  compute->add_option("--reference", compute_options.reference_path,
                      "reference set CSV (required by IGD-family metrics)");
  compute->add_option("--metric", compute_options.metrics,
                      "comma list of r2,nr2,igd,igd+,nigd,nigd+,misinfo,ndfrac,all");
  compute->add_option("--on", compute_options.on,
                      "values classical metrics are computed on")
      ->check(CLI::IsMember({"true", "estimated"}));
  compute->add_option("--normalise", compute_options.normalise, "IGD-family aggregation")
      ->check(CLI::IsMember({"sum", "mean"}));
  compute->add_option("--select-distance", compute_options.selection,
                      "matching distance of the noisy IGD variants")
      ->check(CLI::IsMember({"euclidean", "igd+"}));
  compute->add_option("--format", compute_options.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  compute->add_option("--out", compute_options.out_path, "write output to this path");
  compute->add_flag("--audit-ties", compute_options.audit_ties,
                    "report how often argmin selections tied");
  add_weight_flags(compute, compute_options, 10000);

  DiagnoseOptions diagnose_options;
  CLI::App* diagnose =
      app.add_subcommand("diagnose", "report noise-induced decision errors");
  diagnose->add_option("solutions", diagnose_options.solutions_path, "solution set (CSV or JSON)")
      ->required();
  diagnose->add_option("--reference", diagnose_options.reference_path,
                       "reference set CSV (adds distance-based selection errors)");
  diagnose->add_option("--format", diagnose_options.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  diagnose->add_option("--out", diagnose_options.out_path, "write output to this path");
  add_weight_flags(diagnose, diagnose_options, 10000);

  SweepOptions sweep_options;
  CLI::App* sweep = app.add_subcommand("sweep", "run the noise-sweep experiment");
  sweep->add_option("--config", sweep_options.config_path, "flat JSON experiment config");
  sweep->add_option("--eta", sweep_options.eta_values, "noise half-widths")
      ->delimiter(',');
  sweep->add_option("--reps", sweep_options.replications, "replications per eta");
  sweep->add_option("--solutions", sweep_options.n_solutions, "solutions per generated front");
  sweep->add_option("--weights-m", sweep_options.m_weights, "weight vectors in the shared set");
  sweep->add_option("--ref-size", sweep_options.reference_size, "reference targets on the front");
  sweep->add_option("--seed", sweep_options.seed, "base seed")
      ->trigger_on_parse()
      ->each([&sweep_options](const std::string&) { sweep_options.seed_given = true; });
  sweep->add_option("--scale", sweep_options.front_scale, "front scale factor");
  sweep->add_flag("--concave", sweep_options.concave, "use the concave test front");
  sweep->add_option("--utilities", sweep_options.utilities,
                    "comma list of utility kinds (linear,chebycheff)");
  sweep->add_option("--format", sweep_options.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", sweep_options.out_path, "write the report to this path");

  FigureOptions figure_options;
  CLI::App* figure =
      app.add_subcommand("figure-data", "export plot-ready CSV bundles for one run");
  figure->add_option("solutions", figure_options.solutions_path, "solution set (CSV or JSON)")
      ->required();
  figure->add_option("--reference", figure_options.reference_path, "reference set CSV")
      ->required();
  figure->add_option("--out-dir", figure_options.out_dir, "directory for the bundle")
      ->required();
  add_weight_flags(figure, figure_options, 50);

  ValidateOptions validate_options;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "lint input files before running metrics");
  validate_cmd->add_option("solutions", validate_options.solutions_path,
                           "solution set (CSV or JSON)");
  validate_cmd->add_option("--reference", validate_options.reference_path, "reference set CSV");
  validate_cmd->add_option("--weights", validate_options.weights_path, "weight set CSV");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(compute)) {
    return run_guarded([&] { run_compute(compute_options); });
  }
  if (app.got_subcommand(diagnose)) {
    return run_guarded([&] { run_diagnose(diagnose_options); });
  }
  if (app.got_subcommand(sweep)) {
    return run_guarded([&] { run_sweep(sweep_options); });
  }
  if (app.got_subcommand(figure)) {
    return run_guarded([&] { run_figure_data(figure_options); });
  }
  if (validate_options.solutions_path.empty() && validate_options.reference_path.empty() &&
      validate_options.weights_path.empty()) {
    std::cerr << "error: validate needs at least one input file\n";
    return kExitDimension;
  }
  return run_guarded([&] { run_validate(validate_options); });
}
