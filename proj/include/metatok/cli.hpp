#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metatok {

// Subcommands crystal, whittaker, verify, gauss.
// Returns 0 when everything passes, 1 on a failed identity, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, with args not including the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace metatok
