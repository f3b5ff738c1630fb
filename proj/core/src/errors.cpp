#include "dream/errors.hpp"

namespace dream {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid_parameter";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::construction_failure: return "construction_failure";
    case ErrorCode::degenerate_topology: return "degenerate_topology";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::value_error: return "value_error";
    case ErrorCode::index_error: return "index_error";
    case ErrorCode::mode_error: return "mode_error";
    case ErrorCode::solver_failure: return "solver_failure";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::usage_error: return "usage_error";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace dream
