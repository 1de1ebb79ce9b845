#ifndef NMETRICS_IO_HPP
#define NMETRICS_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nmetrics/diagnostics.hpp"
#include "nmetrics/igd.hpp"
#include "nmetrics/r2.hpp"
#include "nmetrics/sweep.hpp"
#include "nmetrics/types.hpp"
#include "nmetrics/weights.hpp"

namespace nmetrics {

// File formats
//
// Solution set CSV: header `id,t1..tD,r1..rD`; one solution per row.
// Solution set JSON: {"dimension": D,
//                     "solutions": [{"id", "true": [...], "estimated": [...]}]}.
// Reference set CSV: header `a1..aD`.
// Weight set CSV:    header `l1..lD`.
//
// Parse failures carry the 1-based line number. Ids must not contain commas.

/// Dispatches on extension: .json for JSON, anything else parsed as CSV.
[[nodiscard]] SolutionSet read_solution_set(const std::filesystem::path& path);
[[nodiscard]] SolutionSet read_solution_set_csv(std::istream& in);
[[nodiscard]] SolutionSet read_solution_set_json(std::istream& in);
void write_solution_set_csv(const SolutionSet& set, std::ostream& out);

[[nodiscard]] ReferenceSet read_reference_set(const std::filesystem::path& path);
[[nodiscard]] ReferenceSet read_reference_set_csv(std::istream& in);
void write_reference_set_csv(const ReferenceSet& reference, std::ostream& out);

[[nodiscard]] WeightSampleSet read_weights(const std::filesystem::path& path);
[[nodiscard]] WeightSampleSet read_weights_csv(std::istream& in);
/// Full-precision output; a written set reloads bit-exactly.
void write_weights_csv(const WeightSampleSet& weights, std::ostream& out);

/// Flat JSON mirroring the ExperimentConfig field names; unknown fields are
/// rejected, missing ones keep their defaults.
[[nodiscard]] ExperimentConfig read_experiment_config(const std::filesystem::path& path);
[[nodiscard]] ExperimentConfig parse_experiment_config(const std::string& json_text);

// JSON serialisation of results. `ids` (solution ids in index order) makes
// the records carry ids next to indices; pass {} when unavailable.
[[nodiscard]] std::string r2_result_to_json(const R2Result& result,
                                            const std::vector<std::string>& ids = {});
[[nodiscard]] std::string igd_result_to_json(const IGDResult& result,
                                             const std::vector<std::string>& ids = {});
[[nodiscard]] std::string error_report_to_json(const ErrorReport& report);

/// Shortest round-trip decimal representation.
[[nodiscard]] std::string format_double(double value);

/// Writes via a temporary file in the same directory, then renames.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace nmetrics

#endif  // NMETRICS_IO_HPP
