#include "nmetrics/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace nmetrics {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_number(const std::string& field, std::size_t line_number) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    throw parse_error("expected a number, got '" + field + "'", line_number);
  }
  if (!std::isfinite(value)) {
    throw parse_error("non-finite value '" + field + "'", line_number);
  }
  return value;
}

// Validates a header of the shape prefix1..prefixD appearing at
// fields[offset..offset+D), for the D implied by the remaining field count.
void expect_indexed_header(const std::vector<std::string>& fields, std::size_t offset,
                           std::size_t count, const std::string& prefix) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::string expected = prefix + std::to_string(k + 1);
    if (fields[offset + k] != expected) {
      throw parse_error("expected header column '" + expected + "', got '" + fields[offset + k] +
                            "'",
                        1);
    }
  }
}

std::vector<std::vector<std::string>> read_rows(std::istream& in,
                                                std::vector<std::size_t>& line_numbers) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) {
      continue;
    }
    rows.push_back(split_csv_row(line));
    line_numbers.push_back(line_number);
  }
  return rows;
}

std::ifstream open_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error("cannot open '" + path.string() + "'");
  }
  return in;
}

}  // namespace

SolutionSet read_solution_set_csv(std::istream& in) {
  std::vector<std::size_t> line_numbers;
  const auto rows = read_rows(in, line_numbers);
  if (rows.empty()) {
    throw parse_error("empty solution set file", 1);
  }
  const auto& header = rows.front();
  if (header.size() < 3 || header[0] != "id" || (header.size() - 1) % 2 != 0) {
    throw parse_error("header must be id,t1..tD,r1..rD", 1);
  }
  const std::size_t dimension = (header.size() - 1) / 2;
  expect_indexed_header(header, 1, dimension, "t");
  expect_indexed_header(header, 1 + dimension, dimension, "r");

  std::vector<EvaluatedSolution> solutions;
  solutions.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::size_t line_number = line_numbers[r];
    if (row.size() != header.size()) {
      throw parse_error("expected " + std::to_string(header.size()) + " fields, got " +
                            std::to_string(row.size()),
                        line_number);
    }
    std::vector<double> truth(dimension);
    std::vector<double> estimate(dimension);
    for (std::size_t k = 0; k < dimension; ++k) {
      truth[k] = parse_number(row[1 + k], line_number);
      estimate[k] = parse_number(row[1 + dimension + k], line_number);
    }
    solutions.push_back(EvaluatedSolution{row[0], ObjectiveVector(std::move(truth)),
                                          ObjectiveVector(std::move(estimate))});
  }
  return SolutionSet(std::move(solutions));
}

SolutionSet read_solution_set_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw parse_error(std::string("invalid JSON: ") + ex.what());
  }
  try {
    const std::size_t dimension = doc.at("dimension").get<std::size_t>();
    std::vector<EvaluatedSolution> solutions;
    for (const auto& entry : doc.at("solutions")) {
      std::string id = entry.at("id").is_string() ? entry.at("id").get<std::string>()
                                                  : entry.at("id").dump();
      auto truth = entry.at("true").get<std::vector<double>>();
      auto estimate = entry.at("estimated").get<std::vector<double>>();
      if (truth.size() != dimension || estimate.size() != dimension) {
        throw parse_error("solution '" + id + "' does not match declared dimension " +
                          std::to_string(dimension));
      }
      solutions.push_back(EvaluatedSolution{std::move(id), ObjectiveVector(std::move(truth)),
                                            ObjectiveVector(std::move(estimate))});
    }
    return SolutionSet(std::move(solutions));
  } catch (const nlohmann::json::exception& ex) {
    throw parse_error(std::string("invalid solution set JSON: ") + ex.what());
  }
}

SolutionSet read_solution_set(const std::filesystem::path& path) {
  auto in = open_file(path);
  if (path.extension() == ".json") {
    return read_solution_set_json(in);
  }
  return read_solution_set_csv(in);
}

void write_solution_set_csv(const SolutionSet& set, std::ostream& out) {
  out << "id";
  for (std::size_t k = 1; k <= set.dimension(); ++k) {
    out << ",t" << k;
  }
  for (std::size_t k = 1; k <= set.dimension(); ++k) {
    out << ",r" << k;
  }
  out << '\n';
  for (const EvaluatedSolution& s : set.solutions()) {
    out << s.id;
    for (double v : s.true_values) {
      out << ',' << format_double(v);
    }
    for (double v : s.estimated_values) {
      out << ',' << format_double(v);
    }
    out << '\n';
  }
}

ReferenceSet read_reference_set_csv(std::istream& in) {
  std::vector<std::size_t> line_numbers;
  const auto rows = read_rows(in, line_numbers);
  if (rows.empty()) {
    throw parse_error("empty reference set file", 1);
  }
  const auto& header = rows.front();
  const std::size_t dimension = header.size();
  expect_indexed_header(header, 0, dimension, "a");

  std::vector<ObjectiveVector> targets;
  targets.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::size_t line_number = line_numbers[r];
    if (row.size() != dimension) {
      throw parse_error("expected " + std::to_string(dimension) + " fields, got " +
                            std::to_string(row.size()),
                        line_number);
    }
    std::vector<double> values(dimension);
    for (std::size_t k = 0; k < dimension; ++k) {
      values[k] = parse_number(row[k], line_number);
    }
    targets.emplace_back(std::move(values));
  }
  return ReferenceSet(std::move(targets));
}

ReferenceSet read_reference_set(const std::filesystem::path& path) {
  auto in = open_file(path);
  return read_reference_set_csv(in);
}

void write_reference_set_csv(const ReferenceSet& reference, std::ostream& out) {
  for (std::size_t k = 1; k <= reference.dimension(); ++k) {
    out << (k == 1 ? "" : ",") << 'a' << k;
  }
  out << '\n';
  for (const ObjectiveVector& target : reference.targets()) {
    for (std::size_t k = 0; k < reference.dimension(); ++k) {
      out << (k == 0 ? "" : ",") << format_double(target[k]);
    }
    out << '\n';
  }
}

WeightSampleSet read_weights_csv(std::istream& in) {
  std::vector<std::size_t> line_numbers;
  const auto rows = read_rows(in, line_numbers);
  if (rows.empty()) {
    throw parse_error("empty weight set file", 1);
  }
  const auto& header = rows.front();
  const std::size_t dimension = header.size();
  expect_indexed_header(header, 0, dimension, "l");

  std::vector<WeightVector> samples;
  samples.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::size_t line_number = line_numbers[r];
    if (row.size() != dimension) {
      throw parse_error("expected " + std::to_string(dimension) + " fields, got " +
                            std::to_string(row.size()),
                        line_number);
    }
    std::vector<double> values(dimension);
    for (std::size_t k = 0; k < dimension; ++k) {
      values[k] = parse_number(row[k], line_number);
    }
    samples.emplace_back(std::move(values));
  }
  return WeightSampleSet(std::move(samples));
}

WeightSampleSet read_weights(const std::filesystem::path& path) {
  auto in = open_file(path);
  return read_weights_csv(in);
}

void write_weights_csv(const WeightSampleSet& weights, std::ostream& out) {
  for (std::size_t k = 1; k <= weights.dimension(); ++k) {
    out << (k == 1 ? "" : ",") << 'l' << k;
  }
  out << '\n';
  for (const WeightVector& w : weights.samples()) {
    for (std::size_t k = 0; k < weights.dimension(); ++k) {
      out << (k == 0 ? "" : ",") << format_double(w[k]);
    }
    out << '\n';
  }
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw parse_error(std::string("invalid config JSON: ") + ex.what());
  }
  if (!doc.is_object()) {
    throw parse_error("config must be a JSON object");
  }
  ExperimentConfig config;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "eta_values") {
        config.eta_values = value.get<std::vector<double>>();
      } else if (key == "replications") {
        config.replications = value.get<std::size_t>();
      } else if (key == "n_solutions") {
        config.n_solutions = value.get<std::size_t>();
      } else if (key == "m_weights") {
        config.m_weights = value.get<std::size_t>();
      } else if (key == "reference_set_size") {
        config.reference_set_size = value.get<std::size_t>();
      } else if (key == "base_seed") {
        config.base_seed = value.get<std::uint64_t>();
      } else if (key == "front_scale") {
        config.front_scale = value.get<double>();
      } else if (key == "concave_front") {
        config.concave_front = value.get<bool>();
      } else if (key == "utilities") {
        config.include_linear = false;
        config.include_chebycheff = false;
        for (const auto& kind : value) {
          const std::string name = kind.get<std::string>();
          if (name == "linear") {
            config.include_linear = true;
          } else if (name == "chebycheff") {
            config.include_chebycheff = true;
          } else {
            throw config_error("utilities: unknown utility kind '" + name + "'");
          }
        }
      } else {
        throw config_error("unknown config field '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw parse_error(std::string("invalid config JSON: ") + ex.what());
  }
  validate(config);
  return config;
}

ExperimentConfig read_experiment_config(const std::filesystem::path& path) {
  auto in = open_file(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str());
}

namespace {

nlohmann::json record_json(std::size_t index, std::size_t solution_index, double value,
                           const char* value_key, const std::vector<std::string>& ids,
                           const char* index_key) {
  nlohmann::json j{{index_key, index}, {"solution_index", solution_index}, {value_key, value}};
  if (solution_index < ids.size()) {
    j["solution_id"] = ids[solution_index];
  }
  return j;
}

}  // namespace

std::string r2_result_to_json(const R2Result& result, const std::vector<std::string>& ids) {
  nlohmann::json doc;
  doc["value"] = result.value;
  doc["per_sample"] = nlohmann::json::array();
  for (const R2SampleRecord& record : result.per_sample) {
    doc["per_sample"].push_back(record_json(record.weight_index, record.solution_index,
                                            record.utility, "utility", ids, "weight_index"));
  }
  return doc.dump(2);
}

std::string igd_result_to_json(const IGDResult& result, const std::vector<std::string>& ids) {
  nlohmann::json doc;
  doc["value"] = result.value;
  doc["per_target"] = nlohmann::json::array();
  for (const IGDTargetRecord& record : result.per_target) {
    doc["per_target"].push_back(record_json(record.target_index, record.solution_index,
                                            record.distance, "distance", ids, "target_index"));
  }
  return doc.dump(2);
}

std::string error_report_to_json(const ErrorReport& report) {
  nlohmann::json doc;
  doc["excluded_ids"] = report.excluded_ids;
  doc["included_ids"] = report.included_ids;
  doc["selection_errors"] = nlohmann::json::array();
  for (const RegretRecord& record : report.selection) {
    doc["selection_errors"].push_back({{"sample_index", record.sample_index},
                                       {"picked_index", record.picked_index},
                                       {"best_index", record.best_index},
                                       {"regret", record.regret}});
  }
  doc["misinformation"] = report.misinformation;
  doc["regret_sum"] = report.regret_sum;
  doc["regret_mean"] = report.mean_regret();
  doc["sample_count"] = report.sample_count;
  return doc.dump(2);
}

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_double failed");
  }
  return std::string(buffer.data(), ptr);
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
      throw std::runtime_error("write to '" + temp.string() + "' failed");
    }
  }
  std::filesystem::rename(temp, path);
}

}  // namespace nmetrics
