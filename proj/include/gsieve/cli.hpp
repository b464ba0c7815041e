#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace gsieve::cli {

/// Exit codes: 0 success, 1 usage/parse error, 2 physics-constraint error,
/// 3 numerical failure.
enum ExitCode : int { kOk = 0, kUsage = 1, kPhysics = 2, kNumerical = 3 };

/// Entry point behind the `gsieve` executable; `args` includes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Applies one `key.path=value` override; value is parsed as JSON when
/// possible, otherwise taken as a string.
void apply_override(nlohmann::json& config, const std::string& assignment);

int cmd_validate(const nlohmann::json& config, std::ostream& out, std::ostream& err);
int cmd_evolve(const nlohmann::json& config, std::ostream& out, std::ostream& err);
int cmd_sieve(const nlohmann::json& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const nlohmann::json& config, std::ostream& out, std::ostream& err);
int cmd_wigner(const nlohmann::json& config, std::ostream& out, std::ostream& err);

}  // namespace gsieve::cli
