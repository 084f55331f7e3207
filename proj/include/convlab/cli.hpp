#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace convlab {

/// Exit codes: 0 pass, 1 fail (predicate false, certificate or suite
/// failure), 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience for tests; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convlab
