#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "powerparts/cli.hpp"

using namespace powerparts;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& s)
{
    std::string t = s;
    while (!t.empty() && t.back() == '\n') t.pop_back();
    const auto pos = t.rfind('\n');
    return pos == std::string::npos ? t : t.substr(pos + 1);
}

} // namespace

TEST_CASE("count")
{
    auto r = run({"count", "--k", "1", "--n", "10"});
    CHECK(r.code == cli::kOk);
    CHECK(last_line(r.out) == "10,42");
    CHECK(last_line(run({"count", "--k", "2", "--n", "9"}).out) == "9,4");
    CHECK(last_line(run({"count", "--k", "3", "--n", "0"}).out) == "0,1");
    r = run({"count", "--k", "1", "--n", "5", "--format", "json"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("\"schema\"") != std::string::npos);
}

TEST_CASE("coeffs")
{
    CHECK(last_line(run({"coeffs", "--r", "1", "--k", "2"}).out) == "-17/18");
    CHECK(last_line(run({"coeffs", "--r", "2", "--k", "1"}).out) == "0");
    CHECK(last_line(run({"coeffs", "--poly", "--r", "1"}).out) == "-(11x^2+11x+2)/24");
    CHECK(run({"coeffs", "--r", "1", "--k", "-1"}).code == cli::kUsage);
    CHECK(run({"coeffs", "--r", "1", "--k", "0"}).code == cli::kUsage);
}

TEST_CASE("approx")
{
    auto r = run({"approx", "--k", "1", "--n", "1000", "--R", "3", "--variant", "theorem1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("relative_error") != std::string::npos);
    r = run({"approx", "--variant", "phi", "--k", "2", "--n", "500"});
    CHECK(r.code == cli::kOk);
    const auto m = run({"approx", "--k", "2", "--n", "300", "--R", "1"});
    CHECK(m.code == cli::kOk);
    CHECK(run({"approx", "--k", "2", "--n", "300", "--variant", "nope"}).code == cli::kUsage);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"count", "--k", "1", "--n", "3", "--bogus"}).code == cli::kUsage);
    CHECK(run({"count", "--k", "x", "--n", "3"}).code == cli::kUsage);
    CHECK(run({"count", "--k", "1", "--n", "3", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
}

TEST_CASE("resource guard")
{
    setenv("POWERPARTS_MAX_N", "50", 1);
    const auto r = run({"count", "--k", "1", "--n", "51"});
    unsetenv("POWERPARTS_MAX_N");
    CHECK(r.code == cli::kResource);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify is deterministic")
{
    const auto a = run({"verify", "--suite", "all", "--seed", "7"});
    const auto b = run({"verify", "--suite", "all", "--seed", "7"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsage);
}
