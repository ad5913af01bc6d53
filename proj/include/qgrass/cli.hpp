#pragma once

#include <iosfwd>

namespace qgrass {

/// Command-line entry point. Exit codes: 0 all requested checks pass,
/// 1 a check failed, 2 usage, parse or precondition error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qgrass
