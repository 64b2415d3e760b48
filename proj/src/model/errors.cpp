#include "isingpair/model/errors.hpp"

namespace isingpair {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::inconsistent_parameters: return "inconsistent-parameters";
    case ErrorCode::not_closed: return "not-closed";
    case ErrorCode::not_derivable: return "not-derivable";
    case ErrorCode::iteration_cap: return "iteration-cap";
  }
  return "unknown";
}

}  // namespace isingpair
