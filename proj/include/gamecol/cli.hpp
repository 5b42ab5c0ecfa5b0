#ifndef GAMECOL_CLI_HPP
#define GAMECOL_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace gamecol::cli {

/// Entry point behind the gamecol binary. Streams are injectable so tests
/// can drive the interactive mode. Returns the process exit code: nonzero on
/// bad flags, invalid input, or any failing verification suite.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace gamecol::cli

#endif
