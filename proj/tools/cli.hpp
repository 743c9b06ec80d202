#pragma once

#include <ostream>

namespace commalg {

/// Entry point of the command-line tool, writing reports to `out` and
/// diagnostics to `err`. Returns 0 when every claim holds, 1 on a claim
/// mismatch and 2 on an input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace commalg
