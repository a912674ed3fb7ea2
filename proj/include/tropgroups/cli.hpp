#pragma once

#include <iosfwd>

namespace tropgroups {

// Exit status: 0 success, 1 verification failure or internal error,
// 2 malformed request, 3 Weyl group guard exceeded.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tropgroups
