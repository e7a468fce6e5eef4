#pragma once

// Command-line front end. Every command builds one JSON report; the text
// output is rendered from that same object.

#include "cayley/io.hpp"

#include <ostream>
#include <string>

namespace cayley {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2 };

/// Runs `cayley <command> ...`; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Text rendering of a report: scalars as "key = value", arrays of objects as tables.
std::string render_text(const Json& report);

/// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string digest(const Json& j);

}  // namespace cayley
