#pragma once

#include <string>
#include <vector>

namespace rootloci::cli {

// Entry point for the whole command-line surface; returns the process exit
// code (0 success, 1 verification failure, 2 usage error).
int run(int argc, const char* const* argv);

}  // namespace rootloci::cli
