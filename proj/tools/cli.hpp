#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lcc::cli {

enum ExitCode : int {
    ok = 0,
    invalid_certificate = 1,
    precondition_failed = 2,
    budget_exhausted = 3,
    bad_input = 4,
};

// Runs one command line (args exclude the program name). Results go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// FNV-1a over the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

} // namespace lcc::cli
