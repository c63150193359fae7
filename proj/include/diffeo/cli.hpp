#pragma once

namespace diffeo::cli {

// Entry point of the `diffeo` tool. Exit codes: 0 success / all checks passed,
// 1 computation failure, 2 usage error.
int run(int argc, const char* const* argv);

}  // namespace diffeo::cli
