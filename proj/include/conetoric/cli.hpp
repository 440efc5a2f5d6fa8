#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conetoric {

// Batch front end. `args` excludes the program name. Exit codes: 0 success
// or positive result, 1 negative mathematical result (not good, not
// equivalent, not realizable), 2 input error or undecided.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace conetoric
