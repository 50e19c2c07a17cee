#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reprfn {

// Exit status: 0 all checks pass, 1 counterexample found, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInputError = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reprfn
