#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxspec::cli {

// Parse and run one subcommand. args excludes the program name. Returns the
// process exit code: 0 success, 1 input error, 2 mathematical-contract
// error, 3 theorem-verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxspec::cli
