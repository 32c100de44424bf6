#pragma once

namespace xxchain {

// Command-line front end. Returns the process exit status:
//   0 success, 1 configuration/validation error, 2 runtime error.
int run_cli(int argc, const char* const* argv);

}  // namespace xxchain
