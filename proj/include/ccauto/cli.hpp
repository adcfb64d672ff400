#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccauto {

// Exit codes: 0 verified/success, 1 verdict mismatch, 2 input or system
// error (message on the error stream).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ccauto
