#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cremona {

/// Full command-line front end, callable in-process for tests. Exit codes:
/// 0 success, 1 usage error, 2 computation error, 3 corpus failure.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace cremona
