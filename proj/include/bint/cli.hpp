#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bint {

/// Runs one `bint` command. `args` excludes the program name. Returns the
/// exit code: 0 success or Proved, 1 Refuted / invalid / bound exhausted,
/// 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bint
