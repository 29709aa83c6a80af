#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcluster::cli {

/// Exit codes: 0 success, 1 verification mismatch, 2 input or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcluster::cli
