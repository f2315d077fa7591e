#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liegeo/io.hpp"

namespace liegeo::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kFail = 1, kInputError = 2, kInternalError = 3 };

/// Catalog entry as a file: algebra plus the metric and named subspaces
/// that go with it (e.g. "even" for L_n, "h" for the codimension-2 example).
AlgebraFile catalog_file(const std::string& name, const std::vector<std::string>& params);

/// Entry point behind the liegeo executable; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace liegeo::cli
