#pragma once

#include <stdexcept>
#include <string>

namespace vss {

// Coarse failure classes; the CLI maps them to exit codes (invalid input and
// parse problems -> 3, solver non-convergence -> 2).
enum class ErrorCode {
  invalid_params,
  solver_failure,
  parse_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
  throw Error(ErrorCode::invalid_params, msg);
}
[[noreturn]] inline void fail_solver(const std::string& msg) {
  throw Error(ErrorCode::solver_failure, msg);
}
[[noreturn]] inline void fail_parse(const std::string& msg) {
  throw Error(ErrorCode::parse_error, msg);
}
[[noreturn]] inline void fail_io(const std::string& msg) {
  throw Error(ErrorCode::io_error, msg);
}

}  // namespace vss
