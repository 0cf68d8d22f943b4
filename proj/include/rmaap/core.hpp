#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "rmaap/errors.hpp"

namespace rmaap {

/// Absolute tolerance used for all profit comparisons in the solvers.
inline constexpr double profit_tol = 1e-9;

/**
 * Task profit vector, kept sorted in non-increasing order.
 *
 * Callers may pass values in any order; the constructor sorts them and
 * records the permutation so results can be reported in the original
 * order. All values must be strictly positive.
 */
class TaskProfile {
  public:
    /// @param values task profits in caller order; each must be > 0
    explicit TaskProfile(std::vector<double> values);

    std::size_t size() const { return values_.size(); }

    /// Profits in non-increasing order.
    const std::vector<double>& values() const { return values_; }

    /// values()[i] for convenience.
    double value(std::size_t i) const { return values_[i]; }

    /// Maps sorted position -> position in the caller's original order.
    const std::vector<std::size_t>& perm() const { return perm_; }

    /// Reorders a sorted-position vector back into the caller's original order.
    template <typename T>
    std::vector<T> to_input_order(std::span<const T> sorted) const {
        assert(sorted.size() == perm_.size());
        std::vector<T> out(sorted.size());
        for (std::size_t i = 0; i < perm_.size(); ++i)
            out[perm_[i]] = sorted[i];
        return out;
    }

    /// Reorders a vector given in the caller's original order into sorted positions.
    template <typename T>
    std::vector<T> from_input_order(std::span<const T> input) const {
        assert(input.size() == perm_.size());
        std::vector<T> out(input.size());
        for (std::size_t i = 0; i < perm_.size(); ++i)
            out[i] = input[perm_[i]];
        return out;
    }

  private:
    std::vector<double> values_;
    std::vector<std::size_t> perm_;
};

/// Per-task agent counts, aligned with a TaskProfile's sorted order.
/// Counts are non-negative; the budget check against N is instance-level
/// (see is_valid_assignment).
class Assignment {
  public:
    explicit Assignment(std::vector<std::int64_t> counts);

    std::size_t size() const { return counts_.size(); }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::int64_t count(std::size_t i) const { return counts_[i]; }
    std::int64_t total() const;

  private:
    std::vector<std::int64_t> counts_;
};

/// Per-task disabled-agent counts chosen by the attacker.
class Attack {
  public:
    explicit Attack(std::vector<std::int64_t> removals);

    std::size_t size() const { return removals_.size(); }
    const std::vector<std::int64_t>& removals() const { return removals_; }
    std::int64_t removal(std::size_t i) const { return removals_[i]; }
    std::int64_t total() const;

  private:
    std::vector<std::int64_t> removals_;
};

/// Agents fail independently with probability p.
struct Stochastic {
    double p = 0.0;
};

/// At most alpha agents fail, chosen by a worst-case adversary.
struct Adversarial {
    std::int64_t alpha = 0;
};

using FailureModel = std::variant<Stochastic, Adversarial>;

/// A full problem statement: tasks, agent budget, and failure model.
class ProblemInstance {
  public:
    ProblemInstance(TaskProfile tasks, std::int64_t agents, FailureModel model);

    const TaskProfile& tasks() const { return tasks_; }
    std::int64_t agents() const { return agents_; }
    const FailureModel& model() const { return model_; }

    bool is_stochastic() const { return std::holds_alternative<Stochastic>(model_); }
    bool is_adversarial() const { return std::holds_alternative<Adversarial>(model_); }

    /// Failure probability; throws input_error if the model is adversarial.
    double p() const;
    /// Failure limit; throws input_error if the model is stochastic.
    std::int64_t alpha() const;

  private:
    TaskProfile tasks_;
    std::int64_t agents_;
    FailureModel model_;
};

/// Shifted heaviside H(n) = min(1, n): completion indicator for a task
/// with n surviving agents.
inline int heaviside(std::int64_t n) {
    assert(n >= 0);
    return n > 0 ? 1 : 0;
}

/// Expected total profit sum_i t_i (1 - p^{x_i}) under independent failure
/// probability p. Uses the convention p^0 = 1 (and 0^0 = 1), so unassigned
/// tasks contribute nothing.
double expected_profit(const TaskProfile& tasks, const Assignment& x, double p);

/// Profit remaining after attack d: sum_i t_i H(x_i - d_i).
double post_attack_profit(const TaskProfile& tasks, const Assignment& x, const Attack& d);

/// True iff d removes at most alpha agents in total and never more agents
/// from a task than are assigned there. Never throws; violations (including
/// a length mismatch) yield false.
bool is_valid_attack(const Assignment& x, const Attack& d, std::int64_t alpha) noexcept;

/// True iff x fits within an agent budget of n.
bool is_valid_assignment(const Assignment& x, std::int64_t n) noexcept;

} // namespace rmaap
