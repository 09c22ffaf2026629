#ifndef AMTK_CLI_HPP
#define AMTK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace amtk::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error, 3 a scan or verify
// command found a witness against one of the verified statements.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;

/// Runs the command line (without argv[0]) against the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amtk::cli

#endif
