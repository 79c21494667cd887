#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catalan {

// Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
// args[0] is the program name. Encodings come from positional arguments, or from `in`
// one per line when none are given. CATALAN_MAX_N caps the verify bounds.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace catalan
