#pragma once

#include <ostream>

namespace phantomkit {

/// Exit codes: 0 success or all suites passed, 1 a verification failure,
/// 2 bad input (parse, validation, configuration).
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace phantomkit
