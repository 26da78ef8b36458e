#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posdiag::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 success, 2 unparsable command or input, 3 input outside
/// the operation's domain (or a diagram that fails verification), 4 failed
/// internal self-check. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace posdiag::cli
