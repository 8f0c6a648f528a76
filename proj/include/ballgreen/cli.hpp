#pragma once

#include <string>
#include <vector>

namespace ballgreen::cli {

// Runs one CLI invocation; args exclude the program name.
// Exit codes: 0 success / all checks passed, 1 check failure or runtime
// error, 2 usage error.
int dispatch(const std::vector<std::string>& args);

}  // namespace ballgreen::cli
