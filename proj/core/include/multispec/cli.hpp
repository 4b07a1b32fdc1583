#ifndef MULTISPEC_CLI_HPP
#define MULTISPEC_CLI_HPP

#include <iosfwd>

namespace multispec {

// Full command-line front end; returns the process exit code
// (0 success, 1 error, 2 mathematical hypothesis not satisfied).
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multispec

#endif
