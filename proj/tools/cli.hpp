#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hstar::cli {

/// Runs one command line (without the program name). JSON lines go to `out`,
/// the human summary and errors to `err`. Returns 0 if every report passes,
/// 1 if some check fails, 2 on malformed input or usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hstar::cli
