#include "rmaap/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rmaap {

TaskProfile::TaskProfile(std::vector<double> values) {
    if (values.empty())
        throw input_error("tasks: must contain at least one task");
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw input_error("tasks: values must be finite and strictly positive");
    }
    perm_.resize(values.size());
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    // stable: equal profits keep their input order
    std::stable_sort(perm_.begin(), perm_.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    values_.reserve(values.size());
    for (std::size_t src : perm_)
        values_.push_back(values[src]);
}

Assignment::Assignment(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
    for (std::int64_t c : counts_)
        if (c < 0)
            throw input_error("assignment: counts must be non-negative");
}

std::int64_t Assignment::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

Attack::Attack(std::vector<std::int64_t> removals) : removals_(std::move(removals)) {
    for (std::int64_t r : removals_)
        if (r < 0)
            throw input_error("attack: removals must be non-negative");
}

std::int64_t Attack::total() const {
    return std::accumulate(removals_.begin(), removals_.end(), std::int64_t{0});
}

ProblemInstance::ProblemInstance(TaskProfile tasks, std::int64_t agents, FailureModel model)
    : tasks_(std::move(tasks)), agents_(agents), model_(model) {
    if (agents_ < 0)
        throw input_error("agents: must be non-negative");
    if (const auto* s = std::get_if<Stochastic>(&model_)) {
        if (!(s->p >= 0.0 && s->p <= 1.0))
            throw input_error("p: must lie in [0, 1]");
    } else {
        const auto& a = std::get<Adversarial>(model_);
        if (a.alpha < 0 || a.alpha > agents_)
            throw input_error("alpha: must satisfy 0 <= alpha <= agents");
    }
}

double ProblemInstance::p() const {
    if (const auto* s = std::get_if<Stochastic>(&model_))
        return s->p;
    throw input_error("p: instance uses the adversarial model (has `alpha`)");
}

std::int64_t ProblemInstance::alpha() const {
    if (const auto* a = std::get_if<Adversarial>(&model_))
        return a->alpha;
    throw input_error("alpha: instance uses the stochastic model (has `p`)");
}

double expected_profit(const TaskProfile& tasks, const Assignment& x, double p) {
    if (x.size() != tasks.size())
        throw input_error("assignment: length does not match task count");
    if (!(p >= 0.0 && p <= 1.0))
        throw input_error("p: must lie in [0, 1]");
    double total = 0.0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        // std::pow(0,0) == 1, so x_i == 0 contributes nothing for any p
        total += tasks.value(i) * (1.0 - std::pow(p, static_cast<double>(x.count(i))));
    }
    return total;
}

double post_attack_profit(const TaskProfile& tasks, const Assignment& x, const Attack& d) {
    if (x.size() != tasks.size())
        throw input_error("assignment: length does not match task count");
    if (d.size() != x.size())
        throw input_error("attack: length does not match task count");
    double total = 0.0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (d.removal(i) > x.count(i))
            throw input_error("attack: removals exceed assigned agents on a task");
        total += tasks.value(i) * heaviside(x.count(i) - d.removal(i));
    }
    return total;
}

bool is_valid_attack(const Assignment& x, const Attack& d, std::int64_t alpha) noexcept {
    if (d.size() != x.size())
        return false;
    std::int64_t used = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (d.removal(i) > x.count(i))
            return false;
        used += d.removal(i);
    }
    return used <= alpha;
}

bool is_valid_assignment(const Assignment& x, std::int64_t n) noexcept {
    return x.total() <= n;
}

} // namespace rmaap
