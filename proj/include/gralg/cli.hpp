#ifndef GRALG_CLI_HPP
#define GRALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gralg {

// Full command dispatch on argv minus the program name. Returns the process
// exit code: 0 success, 2 violated inequality, 3 window-limited result under
// --strict, 64 bad flags, 65 unusable input.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace gralg

#endif
