#ifndef PFUNC_CLI_HPP
#define PFUNC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pfunc {

/// Runs one pfunc command. `args` is the command line without the program
/// name. Returns the process exit status: 0 success, 1 domain error,
/// 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pfunc

#endif  // PFUNC_CLI_HPP
