#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lineart::cli {

enum ExitCode { Ok = 0, ParseFailure = 2, GenericityFailure = 3, OperationFailure = 4 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lineart::cli
