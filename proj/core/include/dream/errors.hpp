#pragma once

#include <stdexcept>
#include <string>

namespace dream {

// Machine-readable failure categories. The CLI maps these to exit codes,
// so adding a value means extending the table in tools/dream_cli.cpp.
enum class ErrorCode {
  invalid_parameter,
  dimension_mismatch,
  construction_failure,
  degenerate_topology,
  parse_error,
  value_error,
  index_error,
  mode_error,
  solver_failure,
  divergence,
  usage_error,
  io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Inner solver gave up; carries the last residual for diagnostics.
class SolverFailure : public Error {
 public:
  SolverFailure(const std::string& message, double residual)
      : Error(ErrorCode::solver_failure, message), residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace dream
