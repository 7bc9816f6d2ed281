#ifndef TDC_CLI_HPP
#define TDC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tdc::cli {

// Runs the command line given the arguments after the program name.
// Exit status: 0 success, 1 failed verification, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tdc::cli

#endif
