#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sperm {

// Runs one command; returns the process exit code.
// 0 = success / verification passed, 1 = verification failed, 2 = usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sperm
