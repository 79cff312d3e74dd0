#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dedp::cli {

/// Dispatches one subcommand. Exit codes: 0 success/verified, 1 negative or
/// failed verification, 2 usage error, 3 format error, 4 resource cap hit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dedp::cli
