#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"

using nlohmann::json;
using testutil::read_file;
using testutil::run_cli;
using testutil::write_file;

namespace {

std::string demo_stochastic() {
    return write_file("cli_stoch.json", R"({"tasks": [70, 30, 10], "agents": 3, "p": 0.3})")
        .string();
}

std::string demo_adversarial() {
    return write_file("cli_adv.json",
                      R"({"tasks": [90, 65, 55, 30, 15], "agents": 9, "alpha": 3})")
        .string();
}

} // namespace

TEST_CASE("solve-stochastic prints the optimal assignment as JSON") {
    for (const char* method : {"relaxed", "greedy"}) {
        auto r = run_cli({"solve-stochastic", "--instance", demo_stochastic(), "--method",
                          method});
        CAPTURE(method);
        REQUIRE_EQ(r.code, 0);
        const json doc = json::parse(r.out);
        CHECK_EQ(doc["method"], method);
        CHECK_EQ(doc["assignment"], json::array({2, 1, 0}));
        CHECK(std::fabs(doc["value"].get<double>() - 84.7) <= 1e-9);
    }
}

TEST_CASE("solve-stochastic reports assignments in the caller's task order") {
    const std::string path =
        write_file("cli_unsorted.json", R"({"tasks": [30, 70, 10], "agents": 3, "p": 0.3})")
            .string();
    auto r = run_cli({"solve-stochastic", "--instance", path, "--method", "relaxed"});
    REQUIRE_EQ(r.code, 0);
    const json doc = json::parse(r.out);
    CHECK_EQ(doc["assignment"], json::array({1, 2, 0}));
}

TEST_CASE("solve-stochastic --pretty prints a table") {
    auto r = run_cli({"solve-stochastic", "--instance", demo_stochastic(), "--method",
                      "relaxed", "--pretty"});
    REQUIRE_EQ(r.code, 0);
    CHECK(r.out.find("expected profit") != std::string::npos);
    CHECK(r.out.find("84.7") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("solve-adversarial exact prints the assignment and the attack") {
    auto r = run_cli({"solve-adversarial", "--instance", demo_adversarial(), "--method",
                      "exact"});
    REQUIRE_EQ(r.code, 0);
    const json doc = json::parse(r.out);
    CHECK_EQ(doc["method"], "exact");
    CHECK_EQ(doc["assignment"], json::array({3, 2, 2, 1, 1}));
    CHECK(std::fabs(doc["worst_case"].get<double>() - 160.0) <= 1e-9);
    CHECK_EQ(doc["attack"]["removals"], json::array({0, 2, 0, 1, 0}));
    CHECK(std::fabs(doc["attack"]["stolen_value"].get<double>() - 95.0) <= 1e-9);
    CHECK(std::fabs(doc["attack"]["surviving_profit"].get<double>() - 160.0) <= 1e-9);
}

TEST_CASE("every adversarial method prints a consistent document") {
    for (const char* method :
         {"exact", "approx", "greedy-baseline", "expectation-baseline"}) {
        auto r = run_cli({"solve-adversarial", "--instance", demo_adversarial(), "--method",
                          method, "--seed", "5"});
        CAPTURE(method);
        REQUIRE_EQ(r.code, 0);
        const json doc = json::parse(r.out);
        CHECK_EQ(doc["method"], method);
        // the printed worst case is always the oracle's surviving profit
        CHECK_EQ(doc["worst_case"].get<double>(),
                 doc["attack"]["surviving_profit"].get<double>());
        std::int64_t total = 0;
        for (const json& c : doc["assignment"]) {
            CHECK(c.get<std::int64_t>() >= 0);
            total += c.get<std::int64_t>();
        }
        CHECK(total <= 9);
    }
}

TEST_CASE("attack scores a given assignment") {
    const std::string assignment =
        write_file("cli_x.json", "[3, 2, 2, 1, 1]").string();
    auto r = run_cli({"attack", "--instance", demo_adversarial(), "--assignment", assignment});
    REQUIRE_EQ(r.code, 0);
    const json doc = json::parse(r.out);
    CHECK_EQ(doc["assignment"], json::array({3, 2, 2, 1, 1}));
    CHECK_EQ(doc["attack"]["removals"], json::array({0, 2, 0, 1, 0}));
    CHECK(std::fabs(doc["attack"]["surviving_profit"].get<double>() - 160.0) <= 1e-9);
}

TEST_CASE("a solver's printed document round-trips through attack") {
    auto solve = run_cli({"solve-adversarial", "--instance", demo_adversarial(), "--method",
                          "approx"});
    REQUIRE_EQ(solve.code, 0);
    const json solved = json::parse(solve.out);
    const std::string path = write_file("cli_roundtrip.json", solve.out).string();

    auto attack = run_cli({"attack", "--instance", demo_adversarial(), "--assignment", path});
    REQUIRE_EQ(attack.code, 0);
    const json attacked = json::parse(attack.out);
    // bit-for-bit agreement, not merely within tolerance
    CHECK_EQ(attacked["attack"]["surviving_profit"].get<double>(),
             solved["worst_case"].get<double>());
    CHECK_EQ(attacked["assignment"], solved["assignment"]);
}

TEST_CASE("tolerant compares the worst case against the threshold") {
    const std::string assignment = write_file("cli_x.json", "[3, 2, 2, 1, 1]").string();
    auto yes = run_cli({"tolerant", "--instance", demo_adversarial(), "--assignment",
                        assignment, "--threshold", "160"});
    REQUIRE_EQ(yes.code, 0);
    CHECK_EQ(json::parse(yes.out)["tolerant"], true);

    auto no = run_cli({"tolerant", "--instance", demo_adversarial(), "--assignment",
                       assignment, "--threshold", "160.01"});
    REQUIRE_EQ(no.code, 0);
    const json doc = json::parse(no.out);
    CHECK_EQ(doc["tolerant"], false);
    CHECK(std::fabs(doc["worst_case"].get<double>() - 160.0) <= 1e-9);
    CHECK_EQ(doc["threshold"].get<double>(), 160.01);
}

TEST_CASE("input problems exit with code 1 and name the field") {
    SUBCASE("missing file") {
        auto r = run_cli({"solve-stochastic", "--instance", "/nonexistent/file.json",
                          "--method", "greedy"});
        CHECK_EQ(r.code, 1);
        CHECK(r.err.find("cannot read file") != std::string::npos);
    }
    SUBCASE("both failure models") {
        const std::string path =
            write_file("cli_bad_both.json",
                       R"({"tasks": [1, 2], "agents": 2, "p": 0.5, "alpha": 1})")
                .string();
        auto r = run_cli({"solve-stochastic", "--instance", path, "--method", "greedy"});
        CHECK_EQ(r.code, 1);
        CHECK(r.err.find("exactly one") != std::string::npos);
    }
    SUBCASE("model mismatch") {
        auto r = run_cli({"solve-stochastic", "--instance", demo_adversarial(), "--method",
                          "greedy"});
        CHECK_EQ(r.code, 1);
        CHECK(r.err.find("adversarial") != std::string::npos);
    }
    SUBCASE("unknown field") {
        const std::string path =
            write_file("cli_bad_key.json",
                       R"({"tasks": [1, 2], "agents": 2, "p": 0.5, "budget": 3})")
                .string();
        auto r = run_cli({"solve-stochastic", "--instance", path, "--method", "greedy"});
        CHECK_EQ(r.code, 1);
        CHECK(r.err.find("budget") != std::string::npos);
    }
    SUBCASE("assignment of the wrong length") {
        const std::string assignment = write_file("cli_short.json", "[1, 2]").string();
        auto r =
            run_cli({"attack", "--instance", demo_adversarial(), "--assignment", assignment});
        CHECK_EQ(r.code, 1);
        CHECK(r.err.find("expected 5 entries") != std::string::npos);
    }
    SUBCASE("bad method name") {
        auto r = run_cli({"solve-stochastic", "--instance", demo_stochastic(), "--method",
                          "newton"});
        CHECK_EQ(r.code, 1);
    }
    SUBCASE("missing required flag") {
        auto r = run_cli({"solve-stochastic", "--method", "greedy"});
        CHECK_EQ(r.code, 1);
    }
    SUBCASE("unknown subcommand") {
        auto r = run_cli({"minimize"});
        CHECK_EQ(r.code, 1);
    }
}

TEST_CASE("an over-budget assignment exits with code 2") {
    const std::string assignment = write_file("cli_over.json", "[4, 2, 2, 1, 1]").string();
    auto r = run_cli({"attack", "--instance", demo_adversarial(), "--assignment", assignment});
    CHECK_EQ(r.code, 2);
    CHECK(r.err.find("exceeds the budget") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    CHECK_EQ(run_cli({"--help"}).code, 0);
}

TEST_CASE("bench writes deterministic record and summary files") {
    namespace fs = std::filesystem;
    const fs::path dir = testutil::scratch_dir();
    const std::string out_a = (dir / "bench_a.csv").string();
    const std::string out_b = (dir / "bench_b.csv").string();
    const std::vector<std::string> common{"bench",  "--dist", "uniform", "--trials", "25",
                                          "--kmax", "6",      "--nmax",  "8",        "--seed",
                                          "3"};

    auto args_a = common;
    args_a.push_back("--out");
    args_a.push_back(out_a);
    auto ra = run_cli(args_a);
    REQUIRE_EQ(ra.code, 0);

    auto args_b = common;
    args_b.push_back("--out");
    args_b.push_back(out_b);
    auto rb = run_cli(args_b);
    REQUIRE_EQ(rb.code, 0);

    const json doc = json::parse(ra.out);
    CHECK_EQ(doc["dist"], "uniform01");
    CHECK_EQ(doc["trials"], 25);
    CHECK_EQ(doc["records_csv"], out_a);
    const double mean = doc["methods"]["approx"]["mean_ratio"].get<double>();
    CHECK(mean >= 0.0);
    CHECK(mean <= 1.0);

    const std::string csv_a = read_file(out_a);
    const std::string csv_b = read_file(out_b);
    REQUIRE_FALSE(csv_a.empty());
    CHECK_EQ(csv_a, csv_b);
    CHECK_EQ(csv_a.substr(0, 6), "trial,");
    // 25 records plus the header
    CHECK_EQ(std::count(csv_a.begin(), csv_a.end(), '\n'), 26);

    const std::string summary_a = read_file((dir / "bench_a.summary.csv").string());
    const std::string summary_b = read_file((dir / "bench_b.summary.csv").string());
    CHECK_EQ(summary_a, summary_b);
    CHECK_EQ(summary_a.substr(0, 12), "dist,method,");
    CHECK_EQ(std::count(summary_a.begin(), summary_a.end(), '\n'), 5);
}

TEST_CASE("bench rejects a bad distribution name") {
    const std::string out = (testutil::scratch_dir() / "bench_bad.csv").string();
    auto r = run_cli({"bench", "--dist", "cauchy", "--trials", "5", "--out", out});
    CHECK_EQ(r.code, 1);
    CHECK(r.err.find("dist") != std::string::npos);
}

TEST_CASE("bench surfaces an empty constraint box as infeasible") {
    const std::string out = (testutil::scratch_dir() / "bench_empty.csv").string();
    auto r = run_cli({"bench", "--dist", "uniform", "--trials", "5", "--nmax", "3", "--out",
                      out});
    CHECK_EQ(r.code, 2);
}
