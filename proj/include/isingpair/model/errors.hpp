#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isingpair {

enum class ErrorCode {
  inconsistent_parameters,  // two derivations of one quantity disagree
  not_closed,               // a product escapes the span
  not_derivable,            // no rule reaches the requested symbol
  iteration_cap,            // closure loop exceeded its bound
};

std::string_view code_name(ErrorCode code);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(code_name(code)) + ": " + detail), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isingpair
