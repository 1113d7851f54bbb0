#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planeguard {

// Command line front end, factored out for testing. `args` excludes the
// program name. Returns the exit code: 0 success, 1 negative verdict
// (invalid guards, infeasible oracle), 2 usage or input errors.
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace planeguard
