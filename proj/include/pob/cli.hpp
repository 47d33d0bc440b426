#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pob {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitInput = 2;

// args excludes the program name. Documents named "-" (or omitted) are read
// from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pob
