#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csf::cli {

/// Exit codes: 0 success, 1 a check failed or the data is inconsistent,
/// 2 malformed arguments or input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace csf::cli
