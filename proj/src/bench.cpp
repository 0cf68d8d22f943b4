#include "rmaap/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <ostream>
#include <string>

namespace rmaap::bench {

std::string_view dist_name(DistKind kind) {
    switch (kind) {
    case DistKind::uniform01: return "uniform01";
    case DistKind::exponential: return "exponential";
    case DistKind::beta: return "beta";
    }
    return "unknown";
}

DistributionSpec dist_from_name(std::string_view name) {
    if (name == "uniform" || name == "uniform01")
        return DistributionSpec::uniform01();
    if (name == "exp" || name == "exponential")
        return DistributionSpec::exponential();
    if (name == "beta")
        return DistributionSpec::beta();
    throw input_error("dist: expected one of uniform, exp, beta");
}

namespace {

double draw_exponential(Rng& rng, double rate) {
    // inverse CDF; -log1p(-u) = -ln(1-u) stays accurate near u = 0
    return -std::log1p(-rng.uniform01()) / rate;
}

double draw_unit_gamma(Rng& rng, std::int64_t shape) {
    double sum = 0.0;
    for (std::int64_t i = 0; i < shape; ++i)
        sum += draw_exponential(rng, 1.0);
    return sum;
}

double draw_value(const DistributionSpec& dist, Rng& rng) {
    switch (dist.kind) {
    case DistKind::uniform01:
        return rng.uniform01();
    case DistKind::exponential:
        return draw_exponential(rng, dist.rate);
    case DistKind::beta: {
        const double x = draw_unit_gamma(rng, dist.beta_a);
        const double y = draw_unit_gamma(rng, dist.beta_b);
        return x / (x + y);
    }
    }
    return 0.0;
}

void validate(const DistributionSpec& dist) {
    if (dist.kind == DistKind::exponential && !(dist.rate > 0.0))
        throw input_error("dist: exponential rate must be positive");
    if (dist.kind == DistKind::beta && (dist.beta_a < 1 || dist.beta_b < 1))
        throw input_error("dist: beta shape parameters must be positive integers");
}

void append_float(std::string& line, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    line += buf;
}

} // namespace

TaskProfile sample_tasks(const DistributionSpec& dist, std::int64_t k, Rng& rng) {
    if (k < 1)
        throw input_error("tasks: must contain at least one task");
    validate(dist);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(k));
    while (values.size() < static_cast<std::size_t>(k)) {
        const double v = draw_value(dist, rng);
        if (v > 0.0)
            values.push_back(v);
    }
    return TaskProfile(std::move(values));
}

ProblemInstance sample_instance(const TrialConfig& cfg, const DistributionSpec& dist, Rng& rng) {
    // count the admissible (k, N, alpha) triples per N so the draw is
    // uniform over the whole box, not per component
    std::vector<std::int64_t> block(static_cast<std::size_t>(std::max<std::int64_t>(cfg.n_max + 1, 0)), 0);
    std::int64_t total = 0;
    for (std::int64_t n = 4; n <= cfg.n_max; ++n) {
        const std::int64_t k_hi = std::min(cfg.k_max, n);
        const std::int64_t n_k = k_hi - cfg.k_min + 1;
        const std::int64_t n_alpha = n - 3; // alpha in {3, ..., N-1}
        if (n_k > 0 && n_alpha > 0) {
            block[static_cast<std::size_t>(n)] = n_k * n_alpha;
            total += n_k * n_alpha;
        }
    }
    if (total == 0)
        throw infeasible_error(
            "config: no (k, N, alpha) satisfies k_min <= k <= N <= n_max with 2 < alpha < N");

    std::int64_t index = rng.uniform_int(0, total - 1);
    std::int64_t n = 4;
    while (index >= block[static_cast<std::size_t>(n)]) {
        index -= block[static_cast<std::size_t>(n)];
        ++n;
    }
    const std::int64_t n_alpha = n - 3;
    const std::int64_t k = cfg.k_min + index / n_alpha;
    const std::int64_t alpha = 3 + index % n_alpha;

    return ProblemInstance(sample_tasks(dist, k, rng), n, Adversarial{alpha});
}

BenchRecord run_trial(const ProblemInstance& instance, DistKind dist, std::int64_t trial_index,
                      std::uint64_t baseline_seed) {
    BenchRecord rec;
    rec.trial = trial_index;
    rec.dist = dist;
    rec.k = static_cast<std::int64_t>(instance.tasks().size());
    rec.n = instance.agents();
    rec.alpha = instance.alpha();

    rec.exact = solve_exact(instance).worst_case;
    rec.approx = solve_approx(instance).worst_case;
    rec.greedy = baseline_greedy(instance, baseline_seed).worst_case;
    rec.expectation = baseline_expectation(instance).worst_case;

    if (rec.exact <= 1e-12) {
        // all methods tie at zero profit; score everything 1
        rec.ratio_approx = rec.ratio_greedy = rec.ratio_expectation = 1.0;
    } else {
        const auto ratio = [&](double v) { return std::clamp(v / rec.exact, 0.0, 1.0); };
        rec.ratio_approx = ratio(rec.approx);
        rec.ratio_greedy = ratio(rec.greedy);
        rec.ratio_expectation = ratio(rec.expectation);
    }
    return rec;
}

std::vector<BenchRecord> run_suite(const TrialConfig& cfg, const DistributionSpec& dist) {
    if (cfg.trials < 1)
        throw input_error("trials: must be at least 1");
    if (cfg.k_min < 1 || cfg.k_min > cfg.k_max)
        throw input_error("kmax: requires 1 <= k_min <= k_max");

    std::vector<BenchRecord> records;
    records.reserve(static_cast<std::size_t>(cfg.trials));
    for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = derive_rng(cfg.seed, static_cast<std::uint64_t>(trial));
        try {
            ProblemInstance instance = sample_instance(cfg, dist, rng);
            const std::uint64_t baseline_seed = rng.next_u64();
            records.push_back(run_trial(instance, dist.kind, trial, baseline_seed));
        } catch (const infeasible_error&) {
            throw; // an empty box fails every trial; surface it immediately
        } catch (const std::exception& e) {
            std::cerr << "bench: trial " << trial << " aborted: " << e.what() << "\n";
        }
    }
    return records;
}

SuiteSummary summarize(std::span<const BenchRecord> records) {
    if (records.empty())
        throw input_error("records: summarize requires at least one record");
    SuiteSummary s;
    const auto n = static_cast<std::int64_t>(records.size());
    s.exact = {1.0, 1.0, n};
    const auto fold = [&](MethodSummary& m, auto&& get) {
        double sum = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        for (const BenchRecord& r : records) {
            const double v = get(r);
            sum += v;
            lo = std::min(lo, v);
        }
        m = {sum / static_cast<double>(n), lo, n};
    };
    fold(s.approx, [](const BenchRecord& r) { return r.ratio_approx; });
    fold(s.greedy, [](const BenchRecord& r) { return r.ratio_greedy; });
    fold(s.expectation, [](const BenchRecord& r) { return r.ratio_expectation; });
    return s;
}

void write_records_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << "trial,dist,k,N,alpha,exact,approx,greedy,expectation,"
           "ratio_approx,ratio_greedy,ratio_expectation\n";
    std::string line;
    for (const BenchRecord& r : records) {
        line.clear();
        line += std::to_string(r.trial);
        line += ',';
        line += dist_name(r.dist);
        line += ',';
        line += std::to_string(r.k);
        line += ',';
        line += std::to_string(r.n);
        line += ',';
        line += std::to_string(r.alpha);
        for (double v : {r.exact, r.approx, r.greedy, r.expectation, r.ratio_approx,
                         r.ratio_greedy, r.ratio_expectation}) {
            line += ',';
            append_float(line, v);
        }
        line += '\n';
        out << line;
    }
}

void write_summary_csv(std::ostream& out, DistKind dist, const SuiteSummary& summary) {
    out << "dist,method,mean_ratio,min_ratio,trials\n";
    const auto row = [&](std::string_view method, const MethodSummary& m) {
        std::string line;
        line += dist_name(dist);
        line += ',';
        line += method;
        line += ',';
        append_float(line, m.mean_ratio);
        line += ',';
        append_float(line, m.min_ratio);
        line += ',';
        line += std::to_string(m.trials);
        line += '\n';
        out << line;
    };
    row("exact", summary.exact);
    row("approx", summary.approx);
    row("greedy", summary.greedy);
    row("expectation", summary.expectation);
}

} // namespace rmaap::bench
