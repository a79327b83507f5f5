#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sd {

/// Runs one subcommand. Returns 0 on success, 1 on a mathematically negative
/// answer (invalid complex, inadmissible diagram, failed relation check,
/// empty solution set), 2 on malformed input or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sd
