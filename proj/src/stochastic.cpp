#include "rmaap/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <span>

namespace rmaap {

namespace {

struct MarginalEntry {
    double gain;
    std::size_t task;
};

struct MarginalLess {
    // max-heap on gain; equal gains pop the lowest task index first
    bool operator()(const MarginalEntry& a, const MarginalEntry& b) const {
        if (a.gain != b.gain)
            return a.gain < b.gain;
        return a.task > b.task;
    }
};

/// Assigns `extra` agents on top of `counts`, one at a time, each to the
/// task with the largest marginal gain. Operates on the first counts.size()
/// entries of `values`.
void greedy_fill(std::span<const double> values, std::vector<std::int64_t>& counts,
                 std::int64_t extra, double p) {
    if (extra <= 0 || counts.empty())
        return;
    std::priority_queue<MarginalEntry, std::vector<MarginalEntry>, MarginalLess> heap;
    const double keep = 1.0 - p;
    for (std::size_t j = 0; j < counts.size(); ++j)
        heap.push({values[j] * std::pow(p, static_cast<double>(counts[j])) * keep, j});
    for (std::int64_t i = 0; i < extra; ++i) {
        MarginalEntry top = heap.top();
        heap.pop();
        counts[top.task] += 1;
        heap.push({values[top.task] * std::pow(p, static_cast<double>(counts[top.task])) * keep,
                   top.task});
    }
}

StochasticSolution finish(const ProblemInstance& instance, std::vector<std::int64_t> counts) {
    Assignment assignment(std::move(counts));
    double value = expected_profit(instance.tasks(), assignment, instance.p());
    return {std::move(assignment), value};
}

} // namespace

StochasticSolution solve_greedy(const ProblemInstance& instance) {
    const double p = instance.p(); // throws on adversarial instances
    std::vector<std::int64_t> counts(instance.tasks().size(), 0);
    greedy_fill(instance.tasks().values(), counts, instance.agents(), p);
    return finish(instance, std::move(counts));
}

ContinuousAssignment solve_continuous(const TaskProfile& tasks, std::int64_t agents, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw input_error("p: continuous relaxation requires 0 < p < 1");
    if (agents < 0)
        throw input_error("agents: must be non-negative");

    const double log_p = std::log(p);
    // log_p(t_i) = ln t_i / ln p; tasks are sorted, so any negative shares
    // form a suffix of the survivor list
    std::vector<double> logs;
    logs.reserve(tasks.size());
    for (double t : tasks.values())
        logs.push_back(std::log(t) / log_p);

    ContinuousAssignment out;
    std::vector<double> fractions(logs.size());
    while (true) {
        const double k = static_cast<double>(logs.size());
        const double z = (std::accumulate(logs.begin(), logs.end(), 0.0) +
                          static_cast<double>(agents)) /
                         k;
        fractions.resize(logs.size());
        std::size_t kept = 0;
        for (std::size_t i = 0; i < logs.size(); ++i) {
            fractions[i] = z - logs[i];
            if (fractions[i] >= -1e-12)
                ++kept;
        }
        if (kept == logs.size())
            break;
        out.pruned += static_cast<std::int64_t>(logs.size() - kept);
        std::vector<double> surviving;
        surviving.reserve(kept);
        for (std::size_t i = 0; i < logs.size(); ++i)
            if (fractions[i] >= -1e-12)
                surviving.push_back(logs[i]);
        logs = std::move(surviving);
    }
    out.fractions = std::move(fractions);
    return out;
}

StochasticSolution solve_relaxed(const ProblemInstance& instance) {
    const double p = instance.p();
    const TaskProfile& tasks = instance.tasks();
    const std::int64_t n = instance.agents();
    const std::size_t k = tasks.size();

    if (p == 0.0) {
        // no failures: one agent per task, most valuable first
        std::vector<std::int64_t> counts(k, 0);
        const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < top; ++i)
            counts[i] = 1;
        return finish(instance, std::move(counts));
    }
    if (p == 1.0) {
        // every agent fails; nothing is worth assigning
        return finish(instance, std::vector<std::int64_t>(k, 0));
    }

    ContinuousAssignment cont = solve_continuous(tasks, n, p);
    const std::size_t surviving = cont.fractions.size();

    std::vector<std::int64_t> counts(surviving);
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < surviving; ++i) {
        // the small epsilon keeps shares that are integral up to fp noise
        // from losing a full agent to the floor
        counts[i] = std::max<std::int64_t>(
            0, static_cast<std::int64_t>(std::floor(cont.fractions[i] + 1e-12)));
        assigned += counts[i];
    }
    const std::int64_t leftover = n - assigned; // guaranteed 0 <= leftover <= k
    greedy_fill(std::span(tasks.values()).first(surviving), counts, leftover, p);

    counts.resize(k, 0); // pruned tasks re-enter with zero agents
    return finish(instance, std::move(counts));
}

} // namespace rmaap
