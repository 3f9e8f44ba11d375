#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmf {

/// Runs one CLI command. Returns the process exit code: 0 on success or a
/// passing verification, 1 on a failing verification, 2 on usage, parse or
/// hypothesis errors. Form sources are a file path, "-" for stdin, or
/// "builtin:<name>" (delta, f4l5, G<k>).
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

} // namespace qmf
