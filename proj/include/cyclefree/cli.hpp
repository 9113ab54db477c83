#ifndef CYCLEFREE_CLI_HPP
#define CYCLEFREE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclefree {

// Runs one CLI invocation. args excludes the program name. Reports go to
// out, diagnostics to err; in stands in for stdin when no --in is given.
// Exit codes: 0 ok, 1 property violated, 2 usage/format error, 3 budget
// refusal.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace cyclefree

#endif
