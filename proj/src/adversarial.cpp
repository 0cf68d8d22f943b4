#include "rmaap/adversarial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rmaap/rng.hpp"
#include "rmaap/stochastic.hpp"

namespace rmaap {

std::string_view method_name(SolveMethod m) {
    switch (m) {
    case SolveMethod::exact: return "exact";
    case SolveMethod::approx: return "approx";
    case SolveMethod::greedy_baseline: return "greedy_baseline";
    case SolveMethod::expectation_baseline: return "expectation_baseline";
    }
    return "unknown";
}

AttackResult optimal_attack(const TaskProfile& tasks, const Assignment& x, std::int64_t alpha) {
    if (alpha < 0)
        throw input_error("alpha: must be non-negative");
    if (x.size() != tasks.size())
        throw input_error("assignment: length does not match task count");

    // knapsack items: tasks that actually hold agents
    std::vector<std::size_t> item_task;
    std::int64_t total_weight = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.count(i) >= 1) {
            item_task.push_back(i);
            total_weight += x.count(i);
        }
    }
    const std::size_t items = item_task.size();
    const std::size_t cap = static_cast<std::size_t>(std::min(alpha, total_weight));

    // best[i][w]: max stolen value using items i.. with capacity w. The
    // suffix orientation lets reconstruction walk items in index order and
    // include an item whenever doing so preserves the optimum, which yields
    // the lexicographically smallest maximizing task set.
    std::vector<double> best((items + 1) * (cap + 1), 0.0);
    const auto at = [&](std::size_t i, std::size_t w) -> double& {
        return best[i * (cap + 1) + w];
    };
    for (std::size_t i = items; i-- > 0;) {
        const auto weight = static_cast<std::size_t>(x.count(item_task[i]));
        const double value = tasks.value(item_task[i]);
        for (std::size_t w = 0; w <= cap; ++w) {
            double v = at(i + 1, w);
            if (weight <= w)
                v = std::max(v, value + at(i + 1, w - weight));
            at(i, w) = v;
        }
    }

    std::vector<std::int64_t> removals(tasks.size(), 0);
    std::size_t w = cap;
    for (std::size_t i = 0; i < items; ++i) {
        const auto weight = static_cast<std::size_t>(x.count(item_task[i]));
        if (weight <= w && at(i, w) == tasks.value(item_task[i]) + at(i + 1, w - weight)) {
            removals[item_task[i]] = x.count(item_task[i]);
            w -= weight;
        }
    }

    AttackResult result{Attack(std::move(removals)), at(0, cap), 0.0};
    result.surviving_profit = post_attack_profit(tasks, x, result.attack);
    return result;
}

double worst_case_profit(const TaskProfile& tasks, const Assignment& x, std::int64_t alpha) {
    return optimal_attack(tasks, x, alpha).surviving_profit;
}

bool is_alpha_tolerant(const TaskProfile& tasks, const Assignment& x, std::int64_t alpha,
                       double threshold) {
    return worst_case_profit(tasks, x, alpha) >= threshold - profit_tol;
}

std::vector<Assignment> all_decreasing_assignments(std::int64_t n, std::int64_t k) {
    std::vector<Assignment> out;
    enumerate_decreasing_assignments(n, k, [&](std::span<const std::int64_t> parts) {
        out.emplace_back(std::vector<std::int64_t>(parts.begin(), parts.end()));
    });
    return out;
}

AdversarialSolution solve_exact(const ProblemInstance& instance) {
    const std::int64_t alpha = instance.alpha(); // throws on stochastic instances
    const TaskProfile& tasks = instance.tasks();

    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::int64_t> best_counts;
    enumerate_decreasing_assignments(
        instance.agents(), static_cast<std::int64_t>(tasks.size()),
        [&](std::span<const std::int64_t> parts) {
            Assignment candidate(std::vector<std::int64_t>(parts.begin(), parts.end()));
            const double wc = worst_case_profit(tasks, candidate, alpha);
            if (wc > best) {
                best = wc;
                best_counts.assign(parts.begin(), parts.end());
            }
        });
    return {Assignment(std::move(best_counts)), best, SolveMethod::exact};
}

std::vector<double> prefix_sums(const TaskProfile& tasks) {
    std::vector<double> prefix(tasks.size() + 1, 0.0);
    for (std::size_t i = 0; i < tasks.size(); ++i)
        prefix[i + 1] = prefix[i] + tasks.value(i);
    return prefix;
}

double evaluate_even_attack(const TaskProfile& tasks, std::int64_t m, std::int64_t c,
                            std::int64_t d, std::int64_t alpha, std::span<const double> prefix) {
    if (c < 1)
        throw input_error("even split: per-task count c must be at least 1");
    if (m < 1 || m > static_cast<std::int64_t>(tasks.size()))
        throw input_error("even split: m must lie in [1, k]");
    if (d < 0 || d >= m)
        throw input_error("even split: d must lie in [0, m)");
    if (alpha < 0)
        throw input_error("alpha: must be non-negative");
    assert(prefix.size() == tasks.size() + 1);

    const auto u = [&](std::int64_t i) { return prefix[static_cast<std::size_t>(i)]; };
    double worst = std::numeric_limits<double>::infinity();
    const std::int64_t r_max = std::min(d, alpha / (c + 1));
    for (std::int64_t r = 0; r <= r_max; ++r) {
        const std::int64_t s = std::min(m - d, (alpha - r * (c + 1)) / c);
        worst = std::min(worst, (u(d) - u(r)) + (u(m) - u(d + s)));
    }
    return worst;
}

AdversarialSolution solve_approx(const ProblemInstance& instance) {
    const std::int64_t alpha = instance.alpha();
    const TaskProfile& tasks = instance.tasks();
    const std::int64_t n = instance.agents();
    const auto k = static_cast<std::int64_t>(tasks.size());

    if (n == 0)
        return {Assignment(std::vector<std::int64_t>(tasks.size(), 0)), 0.0,
                SolveMethod::approx};

    const std::vector<double> prefix = prefix_sums(tasks);
    double best = -std::numeric_limits<double>::infinity();
    std::int64_t best_m = 1;
    for (std::int64_t m = 1; m <= std::min(k, n); ++m) {
        const std::int64_t c = n / m;
        const std::int64_t d = n - c * m;
        const double wc = evaluate_even_attack(tasks, m, c, d, alpha, prefix);
        if (wc > best) {
            best = wc;
            best_m = m;
        }
    }

    std::vector<std::int64_t> counts(tasks.size(), 0);
    const std::int64_t c = n / best_m;
    const std::int64_t d = n - c * best_m;
    for (std::int64_t i = 0; i < best_m; ++i)
        counts[static_cast<std::size_t>(i)] = c + (i < d ? 1 : 0);
    return {Assignment(std::move(counts)), best, SolveMethod::approx};
}

AdversarialSolution baseline_greedy(const ProblemInstance& instance, std::uint64_t seed) {
    const std::int64_t alpha = instance.alpha();
    const TaskProfile& tasks = instance.tasks();
    const auto k = static_cast<std::int64_t>(tasks.size());

    std::vector<std::int64_t> counts(tasks.size(), 0);
    std::int64_t remaining = instance.agents();
    std::int64_t next_task = 0;
    while (remaining >= alpha + 1 && next_task < k) {
        counts[static_cast<std::size_t>(next_task)] = alpha + 1;
        remaining -= alpha + 1;
        ++next_task;
    }
    Rng rng(seed);
    for (std::int64_t i = 0; i < remaining; ++i)
        counts[static_cast<std::size_t>(rng.uniform_int(0, k - 1))] += 1;

    Assignment assignment(std::move(counts));
    const double wc = worst_case_profit(tasks, assignment, alpha);
    return {std::move(assignment), wc, SolveMethod::greedy_baseline};
}

AdversarialSolution baseline_expectation(const ProblemInstance& instance) {
    const std::int64_t alpha = instance.alpha();
    if (instance.agents() == 0)
        throw infeasible_error("agents: expectation baseline requires at least one agent");

    const double p = std::min(
        static_cast<double>(alpha) / static_cast<double>(instance.agents()), 1.0 - 1e-9);
    ProblemInstance proxy(instance.tasks(), instance.agents(), Stochastic{p});
    StochasticSolution relaxed = solve_relaxed(proxy);

    const double wc = worst_case_profit(instance.tasks(), relaxed.assignment, alpha);
    return {std::move(relaxed.assignment), wc, SolveMethod::expectation_baseline};
}

} // namespace rmaap
