#include "powerparts/asymptotic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "powerparts/combinatorics.hpp"
#include "powerparts/expansion.hpp"
#include "powerparts/special.hpp"
#include "powerparts/wright.hpp"

namespace powerparts {

namespace {

HPReal rat(const Rational& q, long p) { return HPReal(q, p); }

HPReal shifted_n(const HPReal& n, const AsymptoticConstants& c)
{
    HPReal m = n + rat(c.h, n.precision());
    if (m.sign() <= 0) throw std::domain_error("n + h_k must be positive");
    return m;
}

/// b exp((k+1) a N^(1/(k+1))) / N^(3/2-1/(k+1))
HPReal main_term(const HPReal& n, const AsymptoticConstants& c)
{
    const long p = std::max(n.precision(), c.precision);
    const long k = c.k;
    const HPReal root = pow(n, rat(Rational(1, k + 1), p));
    const HPReal expo = rat(Rational(3, 2) - Rational(1, k + 1), p);
    return c.b * exp(c.a * root * (k + 1)) / pow(n, expo);
}

} // namespace

const AsymptoticConstants& constants(long k, long precision)
{
    if (k < 1) throw std::invalid_argument("constants: k must be positive");
    if (precision < kMinPrecision) throw std::invalid_argument("constants: precision below 64 bits");
    static std::mutex mutex;
    static std::map<std::pair<long, long>, std::unique_ptr<AsymptoticConstants>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{k, precision}];
    if (!slot) {
        const long wp = precision + 32;
        auto out = std::make_unique<AsymptoticConstants>();
        out->k = k;
        out->precision = precision;
        const HPReal s = rat(Rational(1) + Rational(1, k), wp);
        const HPReal c = gamma(s) * zeta(s) / k;
        const HPReal a = pow(c, rat(Rational(k, k + 1), wp));
        const HPReal two_pi = HPReal::pi(wp) * 2;
        const HPReal b = a / (pow(two_pi, rat(Rational(k + 1, 2), wp)) * sqrt(s));
        out->c = c.with_precision(precision);
        out->a = a.with_precision(precision);
        out->b = b.with_precision(precision);
        out->h = h_k(k);
        slot = std::move(out);
    }
    return *slot;
}

HPReal m_k(const HPReal& n, const AsymptoticConstants& c)
{
    return main_term(shifted_n(n, c), c);
}

HPReal q_kr_truncated(const HPReal& n, long R, const AsymptoticConstants& c)
{
    if (R < 1) throw std::invalid_argument("R must be at least 1");
    const HPReal m = shifted_n(n, c);
    const long p = m.precision();
    HPReal series(1, p);
    for (long r = 1; r < R; ++r) {
        const HPReal qs = q_star(r, c.k).evaluate(c.a);
        series += qs / pow(m, rat(Rational(r, c.k + 1), p));
    }
    return main_term(m, c) * series;
}

HPReal p_k_asymptotic_plain_n(const HPReal& n, long R, const AsymptoticConstants& c)
{
    if (R < 1) throw std::invalid_argument("R must be at least 1");
    if (n.sign() <= 0) throw std::domain_error("n must be positive");
    const long p = n.precision();
    HPReal series(1, p);
    for (long r = 1; r < R; ++r) {
        const HPReal s = s_k(r, c.h, c.k).evaluate(c.a);
        series += s / pow(n, rat(Rational(r, c.k + 1), p));
    }
    return main_term(n, c) * series;
}

HPReal p_omega(const HPReal& n, long R, long precision)
{
    if (R < 1) throw std::invalid_argument("R must be at least 1");
    if (n.sign() <= 0) throw std::domain_error("n must be positive");
    const long p = std::max(precision, n.precision());
    const HPReal pi = HPReal::pi(p);
    const HPReal front = exp(pi * sqrt(n * 2 / 3)) / (sqrt(HPReal(3, p)) * 4 * n);
    HPReal series(1, p);
    for (long r = 1; r < R; ++r) series += omega_r(r, p) / pow(sqrt(n), r);
    return front * series;
}

HPReal brassesco_y(const HPReal& n)
{
    const long p = n.precision();
    const HPReal pi = HPReal::pi(p);
    const HPReal inner = pi * pi * 2 / 3 * (n - rat(Rational(1, 24), p)) + rat(Rational(1, 4), p);
    return sqrt(inner) * 2 + 1;
}

HPReal p_brassesco(const HPReal& n, long R, long precision)
{
    if (R < 1) throw std::invalid_argument("R must be at least 1");
    if (n.sign() <= 0) throw std::domain_error("n must be positive");
    const long p = std::max(precision, n.precision());
    const HPReal nn = n.with_precision(p);
    const HPReal y = brassesco_y(nn);
    const HPReal pi = HPReal::pi(p);
    const HPReal front = pi * pi * 2 / (sqrt(HPReal(3, p)) * 3) * exp((y - 1) / 2) / (y * y);
    HPReal series(1, p);
    for (long r = 1; r < R; ++r) series += rat(d_r(r), p) / pow(y, r);
    return front * series;
}

HPReal phi_series(const HPReal& rho, const HPReal& beta, const HPReal& z)
{
    if (rho.sign() <= 0) throw std::domain_error("phi_series: rho must be positive");
    if (z.sign() < 0) throw std::domain_error("phi_series: z must be nonnegative");
    const long p = std::max({rho.precision(), beta.precision(), z.precision()});
    const long wp = p + 32;
    const HPReal zw = z.with_precision(wp);
    const HPReal rw = rho.with_precision(wp);
    const HPReal bw = beta.with_precision(wp);
    const HPReal eps = HPReal::pow2(-p, wp);
    HPReal sum(wp);
    HPReal power(1, wp);  // z^l / l!
    int small_run = 0;
    HPReal prev_power(wp);
    constexpr long kMaxTerms = 10'000'000;
    for (long l = 0; l < kMaxTerms; ++l) {
        if (l > 0) power = power * zw / l;
        const HPReal term = power * rgamma(rw * l + bw);
        sum += term;
        const bool decreasing = l > 0 && power <= prev_power;
        if (decreasing && abs(term) <= eps * abs(sum)) {
            if (++small_run >= 30) return sum.with_precision(p);
        } else {
            small_run = 0;
        }
        prev_power = power;
    }
    throw std::runtime_error("phi_series: precision exhausted before convergence");
}

HPReal phi_asymptotic(const Rational& rho, const Rational& beta, const HPReal& n, long R)
{
    if (rho.sign() <= 0) throw std::domain_error("phi_asymptotic: rho must be positive");
    if (R < 1) throw std::invalid_argument("R must be at least 1");
    const long p = n.precision();
    const HPReal r = rat(rho, p);
    const HPReal u = pow(r * n, HPReal(1, p) / (r + 1));
    const HPReal pi = HPReal::pi(p);
    const HPReal front = pow(u, rat(Rational(1, 2) - beta, p)) / sqrt(pi * 2 * (r + 1)) *
                         exp((HPReal(1, p) + HPReal(1, p) / r) * u);
    HPReal series(1, p);
    for (long j = 1; j < R; ++j) {
        const Rational w = w_via_series(j, rho, beta);
        series += rat(rho.pow(j) * w, p) / pow(u, j);
    }
    return front * series;
}

HPReal wright_partition_ratio(const BigInt& pk, long n, const AsymptoticConstants& c)
{
    const long p = c.precision;
    const long k = c.k;
    const HPReal m = shifted_n(HPReal(n, p), c);
    const HPReal z = c.c * k * pow(m, rat(Rational(1, k), p));
    const HPReal phi = phi_series(rat(Rational(1, k), p), rat(Rational(-1, 2), p), z);
    const HPReal pi = HPReal::pi(p);
    const HPReal lhs = from_bigint(pk, p) * pow(pi * 2, rat(Rational(k, 2), p)) * pow(m, rat(Rational(3, 2), p));
    return lhs / phi;
}

HPReal phi_k_log(long k, const HPReal& sigma)
{
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (sigma.sign() <= 0) throw std::domain_error("sigma must be positive");
    const long p = sigma.precision();
    const long wp = p + 32;
    const HPReal s = sigma.with_precision(wp);
    const HPReal eps = HPReal::pow2(-(p + 8), wp);
    HPReal sum(wp);
    for (long m = 1;; ++m) {
        HPReal mk(1, wp);
        for (long i = 0; i < k; ++i) mk = mk * m;
        const HPReal e = exp(-(s * mk));
        HPReal term(wp);
        mpfr_neg(term.get(), e.get(), MPFR_RNDN);
        mpfr_log1p(term.get(), term.get(), MPFR_RNDN);
        sum -= term;
        // Remaining terms are bounded by a geometric tail of e^(-sigma m^k).
        if (e < eps * sum) break;
    }
    return sum.with_precision(p);
}

HPReal mellin_remainder(long k, const HPReal& sigma)
{
    const long p = sigma.precision();
    const long wp = p + 32;
    const AsymptoticConstants& c = constants(k, wp);
    const HPReal s = sigma.with_precision(wp);
    const HPReal full = phi_k_log(k, s);
    const HPReal two_pi = HPReal::pi(wp) * 2;
    const HPReal main = c.c * k / pow(s, rat(Rational(1, k), wp));
    const HPReal logterm = log(s / pow(two_pi, k)) / 2;
    const HPReal lin = rat(c.h, wp) * s;
    return (full - main - logterm - lin).with_precision(p);
}

} // namespace powerparts
