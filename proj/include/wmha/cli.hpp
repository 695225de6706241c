#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wmha {

// Exit codes: 0 every check passed, 1 a check failed or an obstruction was
// found, 2 the input could not be read or does not match the schema.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (args excludes the program name). Reports go to out,
// diagnostics to err; output depends only on the arguments and input files.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wmha
