#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace widecat {

// Runs one command-line invocation (arguments without the program name)
// against the given streams and returns the process exit code:
//   0  success
//   1  domain error   ("error[<name>]: <message>" on err)
//   2  parse or usage error ("parse error at line L, column C: ..." on err)
// Arguments of the form @file are replaced by the whitespace-separated,
// quote-aware tokens of that file before parsing.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace widecat
