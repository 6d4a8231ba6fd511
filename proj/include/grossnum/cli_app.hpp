#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grossnum {

// Runs the command-line tool. `args` excludes the program name. Streams are
// injectable for testing; `in` is only read by the repl subcommand. Returns
// the process exit code: 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace grossnum
