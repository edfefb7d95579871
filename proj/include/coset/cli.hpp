// cli.hpp - command-line front end, separated from main() so tests can
// drive it in-process and capture the streams.
#ifndef COSET_CLI_HPP
#define COSET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coset {

// args is argv without the program name.  Returns the process exit code:
// 0 success (and every requested verification passed), 1 usage or syntax
// error, 2 semantic error from the core modules, 3 a verification failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace coset

#endif
