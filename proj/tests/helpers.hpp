#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "rmaap/cli.hpp"
#include "rmaap/core.hpp"
#include "rmaap/rng.hpp"

namespace testutil {

inline rmaap::TaskProfile tasks_of(std::initializer_list<double> v) {
    return rmaap::TaskProfile(std::vector<double>(v));
}

inline rmaap::Assignment assign_of(std::initializer_list<std::int64_t> v) {
    return rmaap::Assignment(std::vector<std::int64_t>(v));
}

inline rmaap::Attack attack_of(std::initializer_list<std::int64_t> v) {
    return rmaap::Attack(std::vector<std::int64_t>(v));
}

/// Scratch directory for files the tests read back; RMAAP_TEST_DIR is set by
/// ctest, direct runs fall back to the system temp dir.
inline std::filesystem::path scratch_dir() {
    std::filesystem::path dir;
    if (const char* env = std::getenv("RMAAP_TEST_DIR"))
        dir = env;
    else
        dir = std::filesystem::temp_directory_path() / "rmaap-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::filesystem::path write_file(const std::string& name, const std::string& text) {
    const std::filesystem::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    return path;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

/// Random task values on the 2^-10 grid in (0, 1]. Sums of a few thousand
/// such values are exact in double, so profit comparisons that should be
/// identities really are bit-for-bit equal.
inline std::vector<double> dyadic_values(rmaap::Rng& rng, std::int64_t k) {
    std::vector<double> v(static_cast<std::size_t>(k));
    for (double& x : v)
        x = static_cast<double>(rng.uniform_int(1, 1024)) / 1024.0;
    return v;
}

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

inline CliRun run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("rmaap");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code =
        rmaap::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace testutil
