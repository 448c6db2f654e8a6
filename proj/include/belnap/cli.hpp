#ifndef BELNAP_CLI_HPP
#define BELNAP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace belnap {

enum ExitCode : int {
  kExitOk = 0,         // valid, derivable, proof accepted, suites passed
  kExitRefuted = 1,    // invalid or refuted; a countermodel is printed
  kExitInputError = 2,
  kExitCapError = 3,   // more atoms than --max-atoms allows
};

// Runs one subcommand. `args` excludes the program name; `in` backs
// `check -`. Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace belnap

#endif  // BELNAP_CLI_HPP
