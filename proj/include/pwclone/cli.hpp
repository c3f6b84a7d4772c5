#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pwclone {

// Runs one command-line request. Exit status: 0 success (or equivalent),
// 1 well-formed but negative decision (non-equivalent words, failing
// suite), 2 error with a one-line diagnostic on err.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pwclone
