#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symkdv::cli {

// Run the command-line interface on the given arguments (argv[0] excluded),
// writing to the supplied streams. Returns the process exit code:
//   0  success
//   1  domain/validation error (one-line diagnostic on err)
//   2  Newton non-convergence (partial results still written)
//   64 usage error (unknown flag / bad invocation)
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace symkdv::cli
