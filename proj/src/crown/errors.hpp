#pragma once

#include <stdexcept>
#include <string>

namespace crown {

// Violated precondition of an operation (bad ramification, zero divisor, ...).
struct PrecondError : std::runtime_error {
  explicit PrecondError(const std::string& msg) : std::runtime_error(msg) {}
};

// A required root of unity / n-th root does not exist in the configured
// cyclotomic field; the caller must enlarge the cyclotomic order.
struct EnlargeCyclotomic : std::runtime_error {
  explicit EnlargeCyclotomic(const std::string& msg) : std::runtime_error(msg) {}
};

// A decision (pivot choice, zero test) is ambiguous at working precision.
struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// Text input rejected; position is 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

}  // namespace crown
