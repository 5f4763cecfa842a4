#include "powerparts/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerparts/asymptotic.hpp"
#include "powerparts/partition.hpp"
#include "powerparts/wright.hpp"

namespace powerparts::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

long integer_k(const RunConfig& cfg)
{
    const Rational k = Rational::parse(cfg.k);
    if (!k.is_integer() || k.sign() <= 0) throw UsageError("--k must be a positive integer for this command");
    return k.to_long();
}

void check_format(const std::string& f)
{
    if (f != "csv" && f != "json" && f != "latex" && f != "plain") throw UsageError("--format must be csv, json, latex or plain");
}

int cmd_count(const RunConfig& cfg, std::ostream& os)
{
    const long k = integer_k(cfg);
    const long n = cfg.n_hi ? *cfg.n_hi : (cfg.n ? *cfg.n : -1);
    if (n < 0) throw UsageError("count needs --n or --n-hi");
    const PartitionTable t = count_table(k, n);
    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    if (fmt == "csv") {
        write_csv(t, os);
    } else if (fmt == "plain") {
        for (long i = 0; i <= n; ++i) os << i << ' ' << t[i].get_str() << '\n';
    } else if (fmt == "latex") {
        os << "\\begin{tabular}{rr}\n$n$ & $p^{" << k << "}(n)$ \\\\\n\\hline\n";
        for (long i = 0; i <= n; ++i) os << i << " & " << t[i].get_str() << " \\\\\n";
        os << "\\end{tabular}\n";
    } else {
        ordered_json j = {{"schema", 1}, {"k", k}, {"n_hi", n}, {"values", ordered_json::array()}};
        for (long i = 0; i <= n; ++i) j["values"].push_back({{"n", i}, {"p", t[i].get_str()}});
        os << j.dump(2) << '\n';
    }
    return kOk;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& os)
{
    if (cfg.r && cfg.R) throw UsageError("give either --r or --R");
    if (!cfg.r && !cfg.R) throw UsageError("coeffs needs --r (single index) or --R (indices 0..R-1)");
    long lo = 0;
    long hi = 0;
    if (cfg.r) {
        if (*cfg.r < 0) throw UsageError("--r must be nonnegative");
        lo = hi = *cfg.r;
    } else {
        if (*cfg.R < 1) throw UsageError("--R must be at least 1");
        hi = *cfg.R - 1;
    }
    Rational k;
    if (!cfg.poly) {
        k = Rational::parse(cfg.k);
        if (k.is_zero() || k == Rational(-1)) throw UsageError("--k must not be 0 or -1");
    }
    const std::string fmt = cfg.format.empty() ? (cfg.r ? "plain" : "csv") : cfg.format;
    struct Row {
        long r;
        std::string text;
        std::string latex;
    };
    std::vector<Row> rows;
    for (long r = lo; r <= hi; ++r) {
        if (cfg.poly) {
            const QPolynomial p = p_r_polynomial(r);
            rows.push_back({r, p.to_string(), p.to_latex()});
        } else {
            const Rational q = q_r(r, k);
            rows.push_back({r, q.to_string(), QPolynomial(q).to_latex()});
        }
    }
    const std::string label = cfg.poly ? "P_r" : "Q_r";
    if (fmt == "plain") {
        if (cfg.r) {
            os << rows.front().text << '\n';
        } else {
            for (const auto& row : rows) os << row.r << ' ' << row.text << '\n';
        }
    } else if (fmt == "csv") {
        os << "r," << label << '\n';
        for (const auto& row : rows) os << row.r << ',' << row.text << '\n';
    } else if (fmt == "latex") {
        os << "\\begin{tabular}{rl}\n$r$ & " << (cfg.poly ? "$\\mathcal P_r(x)$" : "$\\mathcal Q_r(k)$") << " \\\\\n\\hline\n";
        for (const auto& row : rows) os << row.r << " & $" << row.latex << "$ \\\\\n";
        os << "\\end{tabular}\n";
    } else {
        ordered_json j = {{"schema", 1}, {"poly", cfg.poly}};
        if (!cfg.poly) j["k"] = k.to_string();
        j["rows"] = ordered_json::array();
        for (const auto& row : rows) j["rows"].push_back({{"r", row.r}, {"value", row.text}});
        os << j.dump(2) << '\n';
    }
    return kOk;
}

int cmd_approx(const RunConfig& cfg, std::ostream& os)
{
    const long k = integer_k(cfg);
    if (!cfg.n) throw UsageError("approx needs --n");
    const long n = *cfg.n;
    if (n < 1) throw UsageError("--n must be positive");
    const long R = cfg.R ? *cfg.R : 3;
    if (R < 1) throw UsageError("--R must be at least 1");
    const long p = cfg.precision;
    const std::string& v = cfg.variant;
    if ((v == "omega" || v == "brassesco") && k != 1) throw UsageError("variant " + v + " requires --k 1");
    const PartitionTable t = count_table(k, n);
    const HPReal exact = from_bigint(t[n], p);
    const HPReal nn(n, p);
    HPReal value(p);
    std::string quantity = "approx";
    if (v == "theorem1") {
        value = q_kr_truncated(nn, R, constants(k, p));
    } else if (v == "theorem44") {
        value = p_k_asymptotic_plain_n(nn, R, constants(k, p));
    } else if (v == "omega") {
        value = p_omega(nn, R, p);
    } else if (v == "brassesco") {
        value = p_brassesco(nn, R, p);
    } else if (v == "phi") {
        value = wright_partition_ratio(t[n], n, constants(k, p));
        quantity = "ratio";
    } else {
        throw UsageError("--variant must be theorem1, theorem44, omega, brassesco or phi");
    }
    const HPReal err = quantity == "ratio" ? abs(value - 1) : relative_error(value, exact);
    const std::string fmt = cfg.format.empty() ? "plain" : cfg.format;
    const bool with_r = v != "phi";
    if (fmt == "plain") {
        os << "variant " << v << "\nk " << k << "\nn " << n << '\n';
        if (with_r) os << "R " << R << '\n';
        os << quantity << ' ' << value.to_string() << "\nexact " << t[n].get_str() << '\n'
           << (quantity == "ratio" ? "deviation " : "relative_error ") << err.to_string(6) << '\n';
    } else if (fmt == "csv") {
        os << "variant,k,n,R," << quantity << ",exact," << (quantity == "ratio" ? "deviation" : "relative_error") << '\n';
        os << v << ',' << k << ',' << n << ',' << (with_r ? std::to_string(R) : "") << ',' << value.to_string() << ','
           << t[n].get_str() << ',' << err.to_string(6) << '\n';
    } else if (fmt == "latex") {
        os << "$" << quantity << "$ & $" << value.to_string() << "$ \\\\\n$p^{" << k << "}(" << n << ")$ & $"
           << t[n].get_str() << "$ \\\\\n$\\epsilon$ & $" << err.to_string(6) << "$ \\\\\n";
    } else {
        ordered_json j = {{"schema", 1}, {"variant", v}, {"k", k}, {"n", n}};
        if (with_r) j["R"] = R;
        j[quantity] = value.to_string();
        j["exact"] = t[n].get_str();
        j[quantity == "ratio" ? "deviation" : "relative_error"] = err.to_string(6);
        os << j.dump(2) << '\n';
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os)
{
    static const std::vector<std::string> suites{"coeffs", "asymptotics", "inequalities"};
    std::vector<std::string> todo;
    if (cfg.suite == "all") {
        todo = suites;
    } else if (std::find(suites.begin(), suites.end(), cfg.suite) != suites.end()) {
        todo = {cfg.suite};
    } else {
        throw UsageError("--suite must be coeffs, asymptotics, inequalities or all");
    }
    int failures = 0;
    for (const auto& s : todo) failures += run_suite(s, cfg.seed, os);
    os << (failures == 0 ? "verify: all checks passed" : "verify: " + std::to_string(failures) + " check(s) failed") << '\n';
    return failures == 0 ? kOk : kVerifyFailed;
}

int dispatch(const RunConfig& cfg, std::ostream& os)
{
    if (cfg.precision < kMinPrecision) throw UsageError("--precision must be at least 64");
    if (!cfg.format.empty()) check_format(cfg.format);
    if (cfg.command == "count") return cmd_count(cfg, os);
    if (cfg.command == "coeffs") return cmd_coeffs(cfg, os);
    if (cfg.command == "approx") return cmd_approx(cfg, os);
    return cmd_verify(cfg, os);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Partitions into k-th powers: exact counts, expansion coefficients and checks", "powerparts"};
    app.require_subcommand(1, 1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv | json | latex | plain");
        sub->add_option("--out", cfg.out, "write output to this file");
        sub->add_option("--precision", cfg.precision, "working precision in bits");
    };

    auto* count = app.add_subcommand("count", "table of p^k(n) for 0 <= n <= N");
    count->add_option("--k", cfg.k, "power k")->required();
    count->add_option("--n", cfg.n, "upper bound N");
    count->add_option("--n-hi", cfg.n_hi, "upper bound N (alias)");
    add_common(count);

    auto* coeffs = app.add_subcommand("coeffs", "expansion coefficients Q_r(k) or polynomials P_r(x)");
    coeffs->add_option("--k", cfg.k, "k, any rational except 0 and -1");
    coeffs->add_option("--r", cfg.r, "single index r");
    coeffs->add_option("--R", cfg.R, "indices 0..R-1");
    coeffs->add_flag("--poly", cfg.poly, "print P_r(x)");
    add_common(coeffs);

    auto* approx = app.add_subcommand("approx", "asymptotic approximation against the exact count");
    approx->add_option("--k", cfg.k, "power k");
    approx->add_option("--n", cfg.n, "argument n")->required();
    approx->add_option("--R", cfg.R, "number of terms (default 3)");
    approx->add_option("--variant", cfg.variant, "theorem1 | theorem44 | omega | brassesco | phi");
    add_common(approx);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite, "coeffs | asymptotics | inequalities | all");
    verify->add_option("--seed", cfg.seed, "seed for randomized checks");
    verify->add_option("--delta", cfg.delta, "shift used by the inequality scans");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.out.empty()) return dispatch(cfg, out);
        std::ostringstream buffer;
        const int code = dispatch(cfg, buffer);
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) throw UsageError("cannot open --out file " + cfg.out);
        file << buffer.str();
        return code;
    } catch (const ResourceGuardError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"powerparts"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace powerparts::cli
