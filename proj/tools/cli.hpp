#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace mtc::cli {

using Json = nlohmann::ordered_json;

/// Runs one invocation; args exclude the program name. Returns the exit code:
/// 0 success, 1 domain error or unmet precondition, 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text form of a report. The text report of a command is exactly
/// render_text of its JSON report.
std::string render_text(const Json& report);

}  // namespace mtc::cli
