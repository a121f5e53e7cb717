// Command-line front end. Exit codes: 0 success, 1 domain failure, 2 usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kneadkit {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kneadkit
