#pragma once

#include <ostream>

namespace uavplan::io {

/// Entry point of the `uavplan` tool. Errors are written to `err` as a JSON
/// object; the return value is the process exit code (0 ok, 2 invalid,
/// 3 infeasible, 4 I/O).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uavplan::io
