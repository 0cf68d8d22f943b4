#pragma once

#include <iosfwd>

namespace rmaap::cli {

/**
 * Command-line entry point. Subcommands: solve-stochastic,
 * solve-adversarial, attack, tolerant, bench. Prints a JSON result document
 * to `out` (or a readable table with --pretty). Returns 0 on success, 1 on
 * input errors, 2 on infeasible or degenerate input.
 */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rmaap::cli
