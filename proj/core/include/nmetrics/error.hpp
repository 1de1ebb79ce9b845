#ifndef NMETRICS_ERROR_HPP
#define NMETRICS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nmetrics {

/**
 * @brief Raised when an input file cannot be parsed.
 *
 * line() is the 1-based line number of the offending row, or 0 when the
 * location is unknown (e.g. malformed JSON).
 */
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when objective vectors of different dimension are combined, or when
/// an operation is asked to run on data of the wrong dimension.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a domain invariant is violated: empty set, non-finite
/// objective value, dominated reference target, malformed weight vector, ...
class invariant_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an experiment configuration field is invalid. The message
/// names the offending field.
class config_error : public invariant_error {
 public:
  using invariant_error::invariant_error;
};

}  // namespace nmetrics

#endif  // NMETRICS_ERROR_HPP
