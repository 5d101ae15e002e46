#pragma once

// Command dispatch for the finitary CLI. Kept in the library so the same
// surface is exercisable from tests; the binary under tools/ is a thin
// wrapper. Exit codes: 0 success, 1 domain errors, 2 usage or parse errors.

#include <ostream>
#include <string>
#include <vector>

namespace finitary {

// args excludes the program name. An argument "-" is replaced by the
// (trimmed) stdin text; "@path" is replaced by the file's contents.
int run(const std::vector<std::string>& args, const std::string& stdin_text, std::ostream& out,
        std::ostream& err);

}  // namespace finitary
