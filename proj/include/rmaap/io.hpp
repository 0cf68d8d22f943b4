#pragma once

#include <string>
#include <string_view>

#include "rmaap/core.hpp"

namespace rmaap::io {

/**
 * Instance document: an object with `tasks` (array of positive reals),
 * `agents` (non-negative integer), and exactly one of `p` (real in [0, 1])
 * or `alpha` (integer in [0, agents]). Unknown keys are rejected. Task
 * values may arrive in any order; the profile records the permutation so
 * results can be reported in the order given.
 */
ProblemInstance parse_instance(std::string_view text, std::string_view origin = "instance");

/// Reads and parses an instance file.
ProblemInstance read_instance(const std::string& path);

/**
 * Assignment document: either a bare array of non-negative integers or an
 * object carrying an `assignment` array (extra keys are ignored, so a
 * solver's printed result can be fed back in unchanged). Counts are given
 * in the caller's original task order and are reordered internally; the
 * length must match the instance's task count and the total must fit the
 * agent budget.
 */
Assignment parse_assignment(std::string_view text, const ProblemInstance& instance,
                            std::string_view origin = "assignment");

/// Reads and parses an assignment file against an instance.
Assignment read_assignment(const std::string& path, const ProblemInstance& instance);

} // namespace rmaap::io
