#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "powerparts/asymptotic.hpp"
#include "powerparts/cli.hpp"
#include "powerparts/combinatorics.hpp"
#include "powerparts/demoivre.hpp"
#include "powerparts/expansion.hpp"
#include "powerparts/inequalities.hpp"
#include "powerparts/partition.hpp"
#include "powerparts/special.hpp"
#include "powerparts/wright.hpp"

namespace powerparts::cli {

namespace {

class Reporter {
public:
    explicit Reporter(std::ostream& os) : os_(os) {}

    void check(const std::string& name, bool ok, const std::string& detail = "")
    {
        os_ << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) os_ << ": " << detail;
        os_ << '\n';
        if (!ok) ++failures_;
    }

    void info(const std::string& name, const std::string& detail) { os_ << "INFO " << name << ": " << detail << '\n'; }

    int failures() const { return failures_; }

private:
    std::ostream& os_;
    int failures_ = 0;
};

/// Rational with numerator in [-20, 20] and denominator in [1, 12], avoiding the given values.
Rational random_rational(std::mt19937_64& rng, const std::vector<Rational>& avoid = {})
{
    for (;;) {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 12) + 1;
        const Rational q(num, den);
        if (std::find(avoid.begin(), avoid.end(), q) == avoid.end()) return q;
    }
}

QPolynomial x_poly(std::initializer_list<long> coeffs_low_to_high)
{
    std::vector<Rational> c;
    for (long v : coeffs_low_to_high) c.emplace_back(v);
    return QPolynomial(std::move(c));
}

/// Published closed forms of P_1, P_2, P_3.
std::vector<QPolynomial> published_p()
{
    const QPolynomial factor = x_poly({-1, 1}) * x_poly({2, 1});
    return {
        x_poly({2, 11, 11}) * Rational(-1, 24),
        factor * x_poly({2, 23, 23}) * Rational(-1, 1152),
        factor * x_poly({556, 2396, 11139, 10646, 1183}) * Rational(-1, 414720),
    };
}

void suite_coeffs(Reporter& rep, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);

    {
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 5 && ok; ++trial) {
            const Rational rho = random_rational(rng, {Rational(0), Rational(-1)});
            const Rational beta = random_rational(rng);
            for (long r = 0; r <= 6 && ok; ++r) {
                const Rational a = w_via_series(r, rho, beta);
                if (!(a == w_via_sum(r, rho, beta)) || !(a == w_via_multinomial(r, rho, beta))) {
                    ok = false;
                    detail = "mismatch at r=" + std::to_string(r) + " rho=" + rho.to_string() + " beta=" + beta.to_string();
                }
            }
        }
        rep.check("W_r three-route agreement (r<=6, 5 random pairs)", ok, detail);
    }

    {
        const auto pub = published_p();
        bool ok = true;
        for (long r = 1; r <= 3; ++r) {
            ok = ok && p_r_polynomial(r) == pub[static_cast<std::size_t>(r - 1)];
            for (long k = 1; k <= 10; ++k) {
                const Rational expected = pub[static_cast<std::size_t>(r - 1)].evaluate(Rational(k)) / Rational(k + 1).pow(r);
                ok = ok && q_r(r, Rational(k)) == expected;
            }
        }
        rep.check("Q_1, Q_2, Q_3 closed forms", ok);
    }

    {
        bool ok = true;
        for (long r = 2; r <= 12; ++r) {
            const QPolynomial p = p_r_polynomial(r);
            ok = ok && p.evaluate(Rational(1)).is_zero() && p.evaluate(Rational(-2)).is_zero() && p.degree() <= 2 * r;
        }
        rep.check("P_r(1) = P_r(-2) = 0 and deg P_r <= 2r for 2<=r<=12", ok);
    }

    {
        bool ok = true;
        for (int trial = 0; trial < 50; ++trial) {
            const long n = static_cast<long>(rng() % 9);
            const long k = static_cast<long>(rng() % 6);
            const Rational c = random_rational(rng);
            std::vector<Rational> a;
            for (int i = 0; i < 10; ++i) a.push_back(random_rational(rng));
            const auto res = demoivre_identities_check<Rational>(n, k, c, std::span<const Rational>(a));
            ok = ok && res[0] && res[1] && res[2];
        }
        rep.check("De Moivre shift/homogeneity identities (50 random cases)", ok);
    }

    {
        const LaurentInA a = LaurentInA::a();
        bool ok = true;
        for (long k = 2; k <= 4; ++k) {
            for (long d : {-2L, -1L, 1L, 2L}) {
                const Rational dl(d);
                ok = ok && t_k(k, dl, k) == a * dl;
                ok = ok && t_k(k + 1, dl, k) == LaurentInA(Rational(1, k + 1) - Rational(3, 2)) * dl;
                ok = ok && t_k(2 * k, dl, k) == f_m(2 * k, k) * dl + a * a * (dl * dl * Rational(1, 2));
            }
        }
        rep.check("T_k(k), T_k(k+1), T_k(2k) closed forms for k=2..4", ok);
    }

    rep.check("d_1 = -1/4", d_r(1) == Rational(-1, 4));
}

void suite_asymptotics(Reporter& rep)
{
    const long p = 192;
    {
        const auto& c = constants(1, p);
        const HPReal pi = HPReal::pi(p);
        const HPReal err = relative_error(c.c, pi * pi / 6);
        rep.check("c_1 = pi^2/6", err < HPReal::pow2(-p + 8, p), "relative error " + err.to_string(3));
    }
    {
        bool ok = true;
        HPReal worst(p);
        for (long r = 1; r <= 6; ++r) {
            const HPReal via_s = s_k(r, Rational(-1, 24), 1).evaluate(constants(1, p).a);
            const HPReal e = abs(via_s - omega_r(r, p)) / abs(omega_r(r, p));
            if (e > worst) worst = e;
            ok = ok && e < HPReal(std::string("1e-30"), p);
        }
        rep.check("omega_r equals S_1(r, -1/24) at a = pi/sqrt 6 (r<=6, 30 digits)", ok, "worst " + worst.to_string(3));
    }
    for (long k : {1L, 2L}) {
        const long n = 1000;
        const auto t = shared_table(k, n);
        const HPReal exact = from_bigint((*t)[n], p);
        std::vector<double> errs;
        for (long R = 1; R <= 4; ++R) {
            errs.push_back(relative_error(q_kr_truncated(HPReal(n, p), R, constants(k, p)), exact).to_double());
        }
        // For k = 1 the terms with r >= 2 vanish, so the error is flat after R = 2.
        const bool ok = k == 1 ? errs[0] > errs[1] && errs[2] == errs[1] && errs[3] == errs[1] && errs[2] < 1e-3
                               : errs[0] > errs[1] && errs[1] > errs[2] && errs[2] > errs[3];
        std::ostringstream d;
        d << "errors R=1..4: " << errs[0] << ' ' << errs[1] << ' ' << errs[2] << ' ' << errs[3];
        rep.check("p^" + std::to_string(k) + "(1000) truncated expansion error by R", ok, d.str());
    }
    {
        bool ok = true;
        for (long N : {1L, 10L}) {
            const HPReal z(N, p);
            const HPReal phi = phi_series(HPReal(1, p), HPReal(1, p), z);
            // I_0(2 sqrt N) by the trapezoid rule on exp(x cos t), exact for entire periodic integrands.
            const HPReal x = sqrt(z) * 2;
            const long M = 128;
            HPReal sum(p);
            const HPReal pi = HPReal::pi(p);
            for (long j = 0; j < M; ++j) {
                HPReal c(p);
                const HPReal arg = pi * 2 * j / M;
                mpfr_cos(c.get(), arg.get(), MPFR_RNDN);
                sum += exp(x * c);
            }
            sum = sum / M;
            ok = ok && relative_error(phi, sum) < HPReal::pow2(-p + 16, p);
        }
        rep.check("phi(1,1;N) = I_0(2 sqrt N) for N in {1, 10}", ok);
    }
    {
        const long n = 10000;
        const auto t = shared_table(2, n);
        const HPReal ratio = wright_partition_ratio((*t)[n], n, constants(2, p));
        const HPReal dev = abs(ratio - 1);
        rep.check("Wright-function form of p^2(10^4)", dev < HPReal(Rational(1, 100), p), "deviation " + dev.to_string(4));
    }
}

std::string summary(const InequalityReport& r)
{
    return r.property + " over [" + std::to_string(r.n_lo) + "," + std::to_string(r.n_hi) + "]: first_hold_from " +
           std::to_string(r.first_hold_from) + ", " + std::to_string(r.violations.size()) + " violations";
}

void suite_inequalities(Reporter& rep)
{
    const auto dp = check_desalvo_pak(2000);
    bool below = false;
    for (long v : dp.violations) below = below || v < 45;
    rep.check("DeSalvo-Pak inequality holds for 45 <= n <= 2000", dp.first_hold_from <= 45,
              "first_hold_from " + std::to_string(dp.first_hold_from));
    rep.check("DeSalvo-Pak inequality fails for some n < 45", below, std::to_string(dp.violations.size()) + " violations below 45");
    rep.info("desalvo_pak", dp.to_json());
    for (long k = 1; k <= 4; ++k) {
        const long hi = k == 4 ? 2000 : 5000;
        rep.info("convexity k=" + std::to_string(k) + " (empirical)", summary(check_convexity(k, 1, hi)));
        rep.info("log_concavity k=" + std::to_string(k) + " (empirical)", summary(check_log_concavity(k, 1, hi)));
        if (k >= 2) {
            const auto [c, l] = check_ulas_sharpened(k, hi);
            rep.info("sharpened k=" + std::to_string(k) + " (empirical)", summary(c));
            rep.info("sharpened k=" + std::to_string(k) + " (empirical)", summary(l));
            const auto [oc, ol] = check_ulas_original(k, hi);
            rep.info("original k=" + std::to_string(k) + " (empirical)", summary(oc));
            rep.info("original k=" + std::to_string(k) + " (empirical)", summary(ol));
        }
    }
}

} // namespace

int run_suite(const std::string& suite, std::uint64_t seed, std::ostream& out)
{
    Reporter rep(out);
    out << "== suite " << suite << " ==\n";
    if (suite == "coeffs") suite_coeffs(rep, seed);
    else if (suite == "asymptotics") suite_asymptotics(rep);
    else if (suite == "inequalities") suite_inequalities(rep);
    else throw std::invalid_argument("unknown suite " + suite);
    return rep.failures();
}

} // namespace powerparts::cli
