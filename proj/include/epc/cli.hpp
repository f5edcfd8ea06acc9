#ifndef EPC_CLI_HPP
#define EPC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace epc::cli {

enum ExitCode : int {
  kHolds = 0,     // verdict true, or search completed
  kFails = 1,     // verdict false
  kUsage = 2,     // bad arguments or malformed input
  kBudget = 3,    // a probe hit its node limit; the answer is incomplete
};

/// Runs one command. args excludes the program name. Output goes to `out`,
/// diagnostics and statistics to `err`, graph6 input is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace epc::cli

#endif  // EPC_CLI_HPP
