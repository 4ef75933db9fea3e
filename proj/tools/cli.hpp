#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace soleknot::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on input or parse errors (diagnostics on `err`), 2 when `verify` finds a
/// property violation.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace soleknot::cli
