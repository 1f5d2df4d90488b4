#pragma once

#include <ostream>

namespace tamecft::cli {

/// Exit codes: 0 success with passing verdicts, 1 a verdict failed, 2 bad input.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verdict_failed = 1;
inline constexpr int exit_invalid_input = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tamecft::cli
