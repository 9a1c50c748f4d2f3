#pragma once

/**
 * @file cli.hpp
 * @brief Scriptable command-line front end.
 *
 * Exit codes: 0 = success / affirmative result, 1 = negative result
 * (false, NOT-PAIR, NOT-MEMBER), 2 = usage or domain error. All numeric
 * output is exact except the `regions` CSV, which renders floats for
 * plotting.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace lrforest {

/// Runs one invocation; `args` excludes the program name. Batch mode
/// (`batch` subcommand) reads further command lines from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

} // namespace lrforest
