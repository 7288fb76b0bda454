#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vedom {

// Exit codes: 0 ok, 1 a checked property failed, 2 bad input or guard exceeded.
// `args` excludes the program name. "-" as a file argument reads stdin.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace vedom
