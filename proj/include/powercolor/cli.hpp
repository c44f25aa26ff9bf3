#ifndef POWERCOLOR_CLI_HPP
#define POWERCOLOR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace powercolor {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 on success, 1 when a verification check failed, 2 on
/// usage, parse or IO errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powercolor

#endif
