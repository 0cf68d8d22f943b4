#pragma once

#include <cstdint>
#include <vector>

#include "rmaap/core.hpp"

namespace rmaap {

/// Solution of the continuous relaxation: fractional agent counts for the
/// surviving tasks (in sorted task order) plus the number of tasks that the
/// pruning loop fixed to zero. fractions.size() + pruned == k.
struct ContinuousAssignment {
    std::vector<double> fractions;
    std::int64_t pruned = 0;
};

struct StochasticSolution {
    Assignment assignment;
    double value = 0.0;
};

/**
 * Greedy exact solver: assigns agents one at a time to the task with the
 * largest marginal gain t_j p^{x_j} (1 - p), ties broken by lowest task
 * index. O(k + N log k) via a max-heap whose entries are refreshed lazily:
 * only the task just incremented changes its marginal.
 */
StochasticSolution solve_greedy(const ProblemInstance& instance);

/**
 * Continuous relaxation via equalized marginals: Z = (sum_i log_p t_i + N)/k
 * and x_i = Z - log_p t_i. Tasks whose share comes out negative are removed
 * and the system is re-solved on the survivors (at most k rounds). Requires
 * 0 < p < 1; callers must special-case the endpoints.
 */
ContinuousAssignment solve_continuous(const TaskProfile& tasks, std::int64_t agents, double p);

/**
 * Relax-and-round exact solver: floors the continuous solution and assigns
 * the <= k leftover agents with the greedy marginal rule, then re-appends
 * the pruned tasks as zeros. Runtime O(k^2), independent of N.
 * Special cases: p = 0 puts one agent on each of the min(k, N) most
 * valuable tasks; p = 1 assigns nothing.
 */
StochasticSolution solve_relaxed(const ProblemInstance& instance);

} // namespace rmaap
