#pragma once

// Command-line front end. Every subcommand produces a JSON payload; the
// process exit code is 0 on success, 2 when the answer is Unknown or
// inconclusive, and 1 on input errors.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace locert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconclusive = 2;

struct CommandResult {
  int exit_code = kExitOk;
  /// "ok", "unknown" or "error".
  std::string status = "ok";
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> citations;
  double runtime_ms = 0.0;
  /// Rendered standard output and standard error.
  std::string out;
  std::string err;
};

/// Runs one command; `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

/// Entry point for the executable.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace locert::cli
