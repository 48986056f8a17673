#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conjlang::cli {

/// Runs one `conjlang` invocation; `args` excludes the program name.
/// Returns 0 for success or "yes", 1 for "no", 2 for usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conjlang::cli
