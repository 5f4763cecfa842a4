#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace powerparts::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
    std::string command;
    std::string k = "1";  // rational for coeffs, positive integer elsewhere
    std::optional<long> n;
    std::optional<long> n_hi;
    std::optional<long> r;
    std::optional<long> R;
    long delta = 1;
    long precision = 192;
    std::string format;  // defaults per command
    std::string out;
    std::uint64_t seed = 1;
    std::string suite = "all";
    std::string variant = "theorem1";
    bool poly = false;
};

/// Parses argv and runs the command, writing to out (or --out) and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same with an argument vector excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs one verification suite; returns the number of failed checks.
int run_suite(const std::string& suite, std::uint64_t seed, std::ostream& out);

} // namespace powerparts::cli
