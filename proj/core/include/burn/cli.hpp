#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burn {

/// Command-line front end. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 domain error (bad instance, guard
/// exceeded, failed verification), 2 usage error. Identical invocations
/// produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace burn
