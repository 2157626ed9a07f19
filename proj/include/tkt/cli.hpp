#ifndef TKT_CLI_HPP
#define TKT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tkt {

/// Dispatch a command line. Returns the process exit code:
/// 0 success, 1 domain error, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tkt

#endif
