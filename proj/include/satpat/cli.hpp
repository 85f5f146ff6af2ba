#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satpat::cli {

enum ExitCode { ok = 0, negative = 1, failure = 2 };

/// Runs one command. `args` excludes the program name. Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace satpat::cli
