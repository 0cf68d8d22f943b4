#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "rmaap/adversarial.hpp"
#include "rmaap/core.hpp"
#include "rmaap/rng.hpp"

namespace rmaap::bench {

enum class DistKind { uniform01, exponential, beta };

/**
 * Task-value distribution for generated instances. Defaults carry the
 * reference parameters: exponential rate 2, beta shape (6, 2). The beta
 * sampler draws a gamma ratio built from unit exponentials, so both shape
 * parameters must be positive integers; one beta value consumes
 * beta_a + beta_b uniform draws, exponential and uniform one each (plus
 * redraws for the measure-zero non-positive outcomes).
 */
struct DistributionSpec {
    DistKind kind = DistKind::uniform01;
    double rate = 2.0;
    std::int64_t beta_a = 6;
    std::int64_t beta_b = 2;

    static DistributionSpec uniform01() { return {DistKind::uniform01, 0.0, 0, 0}; }
    static DistributionSpec exponential(double rate = 2.0) {
        return {DistKind::exponential, rate, 0, 0};
    }
    static DistributionSpec beta(std::int64_t a = 6, std::int64_t b = 2) {
        return {DistKind::beta, 0.0, a, b};
    }
};

std::string_view dist_name(DistKind kind);

/// Parses "uniform"/"uniform01", "exp"/"exponential", "beta".
DistributionSpec dist_from_name(std::string_view name);

/**
 * Trial protocol: (k, N, alpha) drawn uniformly from the integer box
 * {k_min <= k <= min(k_max, N), N <= n_max, 2 < alpha < N}. The defaults
 * give the desk-scale study (1000 trials, sizes up to 12).
 */
struct TrialConfig {
    std::int64_t k_min = 2;
    std::int64_t k_max = 12;
    std::int64_t n_max = 12;
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
};

/// One trial's instance parameters, per-method worst-case profits, and
/// ratios to the exact optimum (clamped to [0, 1]; all-zero ties score 1).
struct BenchRecord {
    std::int64_t trial = 0;
    DistKind dist = DistKind::uniform01;
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::int64_t alpha = 0;
    double exact = 0.0;
    double approx = 0.0;
    double greedy = 0.0;
    double expectation = 0.0;
    double ratio_approx = 1.0;
    double ratio_greedy = 1.0;
    double ratio_expectation = 1.0;
};

/// k independent draws, redrawing the (measure-zero) non-positive values,
/// returned sorted non-increasing.
TaskProfile sample_tasks(const DistributionSpec& dist, std::int64_t k, Rng& rng);

/// Uniform draw over the config's (k, N, alpha) box plus sampled task values.
/// Throws infeasible_error when the box is empty.
ProblemInstance sample_instance(const TrialConfig& cfg, const DistributionSpec& dist, Rng& rng);

/// Solves one instance with all four methods and scores the ratios.
BenchRecord run_trial(const ProblemInstance& instance, DistKind dist, std::int64_t trial_index,
                      std::uint64_t baseline_seed);

/**
 * Runs the full protocol: per trial, an independent stream derived from
 * (seed, trial index) drives instance sampling and the greedy baseline, so
 * output is reproducible and independent of evaluation order. A trial whose
 * solver throws is logged to stderr and omitted from the results.
 */
std::vector<BenchRecord> run_suite(const TrialConfig& cfg, const DistributionSpec& dist);

struct MethodSummary {
    double mean_ratio = 0.0;
    double min_ratio = 0.0;
    std::int64_t trials = 0;
};

struct SuiteSummary {
    MethodSummary exact;
    MethodSummary approx;
    MethodSummary greedy;
    MethodSummary expectation;
};

/// Mean and minimum ratio per method. Throws input_error on empty input.
SuiteSummary summarize(std::span<const BenchRecord> records);

/// Header: trial,dist,k,N,alpha,exact,approx,greedy,expectation,
/// ratio_approx,ratio_greedy,ratio_expectation. Floats use 9 significant
/// digits.
void write_records_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Header: dist,method,mean_ratio,min_ratio,trials.
void write_summary_csv(std::ostream& out, DistKind dist, const SuiteSummary& summary);

} // namespace rmaap::bench
