#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nashres::cli {

/// Runs one `nashres` invocation; args excludes the program name. Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace nashres::cli
