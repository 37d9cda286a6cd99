#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quintic {

/// Entry point shared by the binary and the tests. Exit codes: 0 on success,
/// 1 on verification failure, 2 on usage errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quintic
