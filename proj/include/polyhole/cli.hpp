#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyhole {

/// Exit codes: 0 verdict-pass / success, 1 verdict-fail, 2 invalid input,
/// 3 budget bound or unknown verdict.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyhole
