#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homset::cli {

// Runs one command line (program name excluded). Exit codes: 0 success,
// 1 verification failure, 2 input or parameter error, 3 balance verdict
// "unbalanced", 4 budget exhausted. Errors go to err with the prefix
// "ERROR <code>:".
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace homset::cli
