#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rmaap/core.hpp"

namespace rmaap {

/// Outcome of the optimal attack against a fixed assignment. The attack is
/// task-level: each targeted task loses all of its agents (a partial removal
/// never helps the attacker).
struct AttackResult {
    Attack attack;
    double stolen_value = 0.0;     ///< attacker's knapsack objective
    double surviving_profit = 0.0; ///< defender's profit after the attack
};

enum class SolveMethod { exact, approx, greedy_baseline, expectation_baseline };

std::string_view method_name(SolveMethod m);

struct AdversarialSolution {
    Assignment assignment;
    double worst_case = 0.0;
    SolveMethod method = SolveMethod::exact;
};

/**
 * Optimal attacker response: a 0-1 knapsack with capacity alpha, item
 * weights x_i, item values t_i, over the tasks with at least one agent.
 * Solved by dynamic programming in O(alpha k); ties are broken toward the
 * lexicographically smallest set of task indices.
 */
AttackResult optimal_attack(const TaskProfile& tasks, const Assignment& x, std::int64_t alpha);

/// Defender's profit against the optimal attacker.
double worst_case_profit(const TaskProfile& tasks, const Assignment& x, std::int64_t alpha);

/// True iff the worst-case profit of x under failure limit alpha is at
/// least the threshold F (within profit_tol).
bool is_alpha_tolerant(const TaskProfile& tasks, const Assignment& x, std::int64_t alpha,
                       double threshold);

/**
 * Visits every non-increasing vector of k non-negative integers summing to
 * exactly n (the partitions of n into at most k parts), each exactly once,
 * in reverse-lexicographic order. The span passed to the visitor is scratch
 * storage owned by the enumerator.
 */
template <typename Visitor>
void enumerate_decreasing_assignments(std::int64_t n, std::int64_t k, Visitor&& visit);

/// Convenience collector for the above.
std::vector<Assignment> all_decreasing_assignments(std::int64_t n, std::int64_t k);

/**
 * Exact maximin solver: scores every decreasing assignment of exactly N
 * agents with the attacker oracle and keeps the best (first encountered on
 * ties). Exponential in k; intended for desk-scale instances.
 */
AdversarialSolution solve_exact(const ProblemInstance& instance);

/**
 * O(k^2) approximation: samples, for each m <= min(k, N), the assignment
 * that spreads all N agents evenly over the m most valuable tasks (most
 * valuable tasks receive the extra agents first) and keeps the sample with
 * the best worst case, evaluated in O(k) via evaluate_even_attack.
 */
AdversarialSolution solve_approx(const ProblemInstance& instance);

/**
 * Worst case of an even-split assignment (d tasks with c+1 agents, then
 * m - d with c) against capacity alpha, given the prefix sums
 * U_0 = 0, U_i = U_{i-1} + t_i. The attacker removes the r most valuable
 * (c+1)-tasks and the s most valuable c-tasks; minimizing over the feasible
 * boundary gives min_r (U_d - U_r) + (U_m - U_{d+s}) with
 * s = min(m - d, (alpha - r(c+1)) / c). Agrees with optimal_attack on the
 * same assignment.
 */
double evaluate_even_attack(const TaskProfile& tasks, std::int64_t m, std::int64_t c,
                            std::int64_t d, std::int64_t alpha, std::span<const double> prefix);

/// U_0 = 0, U_i = U_{i-1} + t_i for i = 1..k.
std::vector<double> prefix_sums(const TaskProfile& tasks);

/**
 * Baseline: alpha+1 agents to each task in value order while that many
 * remain (and tasks remain), then the leftovers one at a time to uniformly
 * random tasks. Seeded and reproducible.
 */
AdversarialSolution baseline_greedy(const ProblemInstance& instance, std::uint64_t seed);

/**
 * Baseline: pretends failures are stochastic with p = min(alpha/N, 1-1e-9),
 * runs the relax-and-round solver, and scores the result against the true
 * adversary.
 */
AdversarialSolution baseline_expectation(const ProblemInstance& instance);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Visitor>
void visit_partitions(std::vector<std::int64_t>& parts, std::size_t pos, std::int64_t remaining,
                      std::int64_t bound, Visitor& visit) {
    const std::int64_t slots = static_cast<std::int64_t>(parts.size() - pos);
    if (slots == 1) {
        parts[pos] = remaining; // remaining <= bound by construction
        visit(std::span<const std::int64_t>(parts));
        return;
    }
    // smallest feasible first part: ceil(remaining / slots)
    const std::int64_t low = (remaining + slots - 1) / slots;
    for (std::int64_t first = std::min(remaining, bound); first >= low; --first) {
        parts[pos] = first;
        visit_partitions(parts, pos + 1, remaining - first, first, visit);
    }
}

} // namespace detail

template <typename Visitor>
void enumerate_decreasing_assignments(std::int64_t n, std::int64_t k, Visitor&& visit) {
    if (n < 0)
        throw input_error("agents: must be non-negative");
    if (k < 1)
        throw input_error("tasks: must contain at least one task");
    std::vector<std::int64_t> parts(static_cast<std::size_t>(k), 0);
    detail::visit_partitions(parts, 0, n, n, visit);
}

} // namespace rmaap
