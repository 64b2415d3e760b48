#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "isingpair/classify/solve.hpp"

namespace isingpair::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Relative --output paths are resolved against this directory when set.
inline constexpr const char* kOutputDirEnv = "ISINGPAIR_OUTPUT_DIR";

/// Runs one command line (without the program name). Tables and reports go
/// to `out` unless --output is given; diagnostics go to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "csv" or "json". Throws std::invalid_argument on any other format or on
/// an empty row set. Rows are sorted by n, then ⟨e,f⟩ descending.
std::string render_table(std::vector<ClassRow> rows, std::string_view format);

}  // namespace isingpair::cli
