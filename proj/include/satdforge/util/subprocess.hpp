#pragma once

#include <optional>
#include <string>
#include <vector>

namespace satdforge::util {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;

  bool ok() const { return exit_code == 0; }
};

struct RunOptions {
  std::optional<std::string> cwd;
  std::optional<std::string> stdin_data;
  std::vector<std::pair<std::string, std::string>> env;  // extra variables
};

// Runs argv[0] with the given arguments (no shell), capturing stdout and
// stderr. Throws std::runtime_error if the process cannot be spawned; a
// nonzero exit status is reported through CommandResult, not an exception.
CommandResult run_command(const std::vector<std::string>& argv,
                          const RunOptions& options = {});

}  // namespace satdforge::util
