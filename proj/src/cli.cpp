#include "rmaap/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmaap/adversarial.hpp"
#include "rmaap/bench.hpp"
#include "rmaap/io.hpp"
#include "rmaap/stochastic.hpp"

namespace rmaap::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt_counts(std::span<const std::int64_t> counts) {
    std::string s = "[";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(counts[i]);
    }
    return s + "]";
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << "\n"; }

json attack_json(const TaskProfile& tasks, const AttackResult& res) {
    return {{"removals", tasks.to_input_order(std::span(res.attack.removals()))},
            {"stolen_value", res.stolen_value},
            {"surviving_profit", res.surviving_profit}};
}

void pretty_attack(std::ostream& out, const TaskProfile& tasks, const AttackResult& res) {
    out << "attack removals  "
        << fmt_counts(tasks.to_input_order(std::span(res.attack.removals()))) << "\n"
        << "stolen value     " << fmt(res.stolen_value) << "\n"
        << "surviving profit " << fmt(res.surviving_profit) << "\n";
}

int cmd_solve_stochastic(const std::string& instance_path, const std::string& method,
                         bool pretty, std::ostream& out) {
    ProblemInstance instance = io::read_instance(instance_path);
    StochasticSolution sol =
        method == "greedy" ? solve_greedy(instance) : solve_relaxed(instance);
    const auto assignment = instance.tasks().to_input_order(std::span(sol.assignment.counts()));
    if (pretty) {
        out << "method           " << method << "\n"
            << "assignment       " << fmt_counts(assignment) << "\n"
            << "expected profit  " << fmt(sol.value) << "\n";
    } else {
        emit(out, {{"method", method}, {"assignment", assignment}, {"value", sol.value}});
    }
    return 0;
}

int cmd_solve_adversarial(const std::string& instance_path, const std::string& method,
                          std::uint64_t seed, bool pretty, std::ostream& out) {
    ProblemInstance instance = io::read_instance(instance_path);
    AdversarialSolution sol = [&] {
        if (method == "exact")
            return solve_exact(instance);
        if (method == "approx")
            return solve_approx(instance);
        if (method == "greedy-baseline")
            return baseline_greedy(instance, seed);
        return baseline_expectation(instance);
    }();
    // re-score with the oracle so the printed worst case, the printed
    // attack, and a later `attack` run over the same files agree bit for bit
    AttackResult oracle = optimal_attack(instance.tasks(), sol.assignment, instance.alpha());
    const auto assignment = instance.tasks().to_input_order(std::span(sol.assignment.counts()));
    if (pretty) {
        out << "method           " << method << "\n"
            << "assignment       " << fmt_counts(assignment) << "\n"
            << "worst case       " << fmt(oracle.surviving_profit) << "\n";
        pretty_attack(out, instance.tasks(), oracle);
    } else {
        emit(out, {{"method", method},
                   {"assignment", assignment},
                   {"worst_case", oracle.surviving_profit},
                   {"attack", attack_json(instance.tasks(), oracle)}});
    }
    return 0;
}

int cmd_attack(const std::string& instance_path, const std::string& assignment_path, bool pretty,
               std::ostream& out) {
    ProblemInstance instance = io::read_instance(instance_path);
    const std::int64_t alpha = instance.alpha();
    Assignment x = io::read_assignment(assignment_path, instance);
    AttackResult oracle = optimal_attack(instance.tasks(), x, alpha);
    const auto assignment = instance.tasks().to_input_order(std::span(x.counts()));
    if (pretty) {
        out << "assignment       " << fmt_counts(assignment) << "\n";
        pretty_attack(out, instance.tasks(), oracle);
    } else {
        emit(out,
             {{"assignment", assignment}, {"attack", attack_json(instance.tasks(), oracle)}});
    }
    return 0;
}

int cmd_tolerant(const std::string& instance_path, const std::string& assignment_path,
                 double threshold, bool pretty, std::ostream& out) {
    ProblemInstance instance = io::read_instance(instance_path);
    const std::int64_t alpha = instance.alpha();
    Assignment x = io::read_assignment(assignment_path, instance);
    const double wc = worst_case_profit(instance.tasks(), x, alpha);
    const bool tolerant = is_alpha_tolerant(instance.tasks(), x, alpha, threshold);
    if (pretty) {
        out << "tolerant         " << (tolerant ? "yes" : "no") << "\n"
            << "worst case       " << fmt(wc) << "\n"
            << "threshold        " << fmt(threshold) << "\n";
    } else {
        emit(out, {{"tolerant", tolerant}, {"worst_case", wc}, {"threshold", threshold}});
    }
    return 0;
}

json summary_json(const bench::MethodSummary& m) {
    return {{"mean_ratio", m.mean_ratio}, {"min_ratio", m.min_ratio}, {"trials", m.trials}};
}

int cmd_bench(const std::string& dist, std::int64_t trials, std::int64_t kmax, std::int64_t nmax,
              std::uint64_t seed, const std::string& out_path, bool pretty, std::ostream& out) {
    const bench::DistributionSpec spec = bench::dist_from_name(dist);
    bench::TrialConfig cfg;
    cfg.k_max = kmax;
    cfg.n_max = nmax;
    cfg.trials = trials;
    cfg.seed = seed;

    std::vector<bench::BenchRecord> records = bench::run_suite(cfg, spec);
    if (records.empty())
        throw infeasible_error("trials: every trial aborted");

    std::ofstream records_out(out_path, std::ios::binary);
    if (!records_out)
        throw input_error("out: cannot write file '" + out_path + "'");
    bench::write_records_csv(records_out, records);

    const bench::SuiteSummary summary = bench::summarize(records);
    const std::string summary_path =
        std::filesystem::path(out_path).replace_extension(".summary.csv").string();
    std::ofstream summary_out(summary_path, std::ios::binary);
    if (!summary_out)
        throw input_error("out: cannot write file '" + summary_path + "'");
    bench::write_summary_csv(summary_out, spec.kind, summary);

    if (pretty) {
        out << "dist             " << bench::dist_name(spec.kind) << "\n"
            << "trials           " << records.size() << "\n"
            << "records csv      " << out_path << "\n"
            << "summary csv      " << summary_path << "\n"
            << "method        mean_ratio   min_ratio\n";
        const auto row = [&](std::string_view name, const bench::MethodSummary& m) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%-12s %11.6f %11.6f\n", std::string(name).c_str(),
                          m.mean_ratio, m.min_ratio);
            out << buf;
        };
        row("exact", summary.exact);
        row("approx", summary.approx);
        row("greedy", summary.greedy);
        row("expectation", summary.expectation);
    } else {
        emit(out, {{"dist", std::string(bench::dist_name(spec.kind))},
                   {"trials", static_cast<std::int64_t>(records.size())},
                   {"records_csv", out_path},
                   {"summary_csv", summary_path},
                   {"methods",
                    {{"exact", summary_json(summary.exact)},
                     {"approx", summary_json(summary.approx)},
                     {"greedy", summary_json(summary.greedy)},
                     {"expectation", summary_json(summary.expectation)}}}});
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Robust multi-agent assignment solvers"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string assignment_path;
    std::string method;
    std::string dist = "uniform";
    std::string out_path;
    double threshold = 0.0;
    std::uint64_t seed = 42;
    std::int64_t trials = 1000;
    std::int64_t kmax = 12;
    std::int64_t nmax = 12;
    bool pretty = false;

    app.add_flag("--pretty", pretty, "Readable table instead of JSON");

    auto* ss = app.add_subcommand("solve-stochastic",
                                  "Maximize expected profit under failure probability p");
    ss->add_option("--instance", instance_path, "Instance file")->required();
    ss->add_option("--method", method, "Solver")
        ->required()
        ->check(CLI::IsMember({"greedy", "relaxed"}));
    ss->add_flag("--pretty", pretty, "Readable table instead of JSON");

    auto* sa = app.add_subcommand("solve-adversarial",
                                  "Maximize worst-case profit under failure limit alpha");
    sa->add_option("--instance", instance_path, "Instance file")->required();
    sa->add_option("--method", method, "Solver")
        ->required()
        ->check(CLI::IsMember({"exact", "approx", "greedy-baseline", "expectation-baseline"}));
    sa->add_option("--seed", seed, "Seed for greedy-baseline leftovers");
    sa->add_flag("--pretty", pretty, "Readable table instead of JSON");

    auto* at = app.add_subcommand("attack", "Optimal attacker response to an assignment");
    at->add_option("--instance", instance_path, "Instance file")->required();
    at->add_option("--assignment", assignment_path, "Assignment file")->required();
    at->add_flag("--pretty", pretty, "Readable table instead of JSON");

    auto* to = app.add_subcommand("tolerant",
                                  "Check whether an assignment keeps profit >= threshold");
    to->add_option("--instance", instance_path, "Instance file")->required();
    to->add_option("--assignment", assignment_path, "Assignment file")->required();
    to->add_option("--threshold", threshold, "Profit threshold F")->required();
    to->add_flag("--pretty", pretty, "Readable table instead of JSON");

    auto* be = app.add_subcommand("bench", "Optimality-ratio study over random instances");
    be->add_option("--dist", dist, "Task-value distribution: uniform, exp, beta");
    be->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
    be->add_option("--kmax", kmax, "Largest task count");
    be->add_option("--nmax", nmax, "Largest agent count");
    be->add_option("--seed", seed, "Suite seed");
    be->add_option("--out", out_path, "Records CSV path")->required();
    be->add_flag("--pretty", pretty, "Readable table instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*ss)
            return cmd_solve_stochastic(instance_path, method, pretty, out);
        if (*sa)
            return cmd_solve_adversarial(instance_path, method, seed, pretty, out);
        if (*at)
            return cmd_attack(instance_path, assignment_path, pretty, out);
        if (*to)
            return cmd_tolerant(instance_path, assignment_path, threshold, pretty, out);
        if (*be)
            return cmd_bench(dist, trials, kmax, nmax, seed, out_path, pretty, out);
    } catch (const infeasible_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace rmaap::cli
