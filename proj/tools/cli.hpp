#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace disep::cli {

/// Runs the command line `args` (without the program name). Reports go to `out`
/// unless --out is given; diagnostics go to `err`. Returns the process exit code:
/// 0 when every check passed, 1 when a check failed, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON schema (draft-07) covering every report the tool emits.
nlohmann::json report_schema();

}  // namespace disep::cli
