#include "powerparts/special.hpp"

#include <algorithm>
#include <stdexcept>

#include "powerparts/combinatorics.hpp"

namespace powerparts {

namespace {

constexpr long kGuardBits = 32;

bool is_nonpositive_integer(const HPReal& x)
{
    return x.sign() <= 0 && mpfr_integer_p(x.get()) != 0;
}

/// sin(pi x) with the argument reduced modulo 2 first.
HPReal sin_pi(const HPReal& x)
{
    const long wp = x.precision();
    HPReal half = x / 2;
    HPReal r = x - floor(half) * 2;  // in [0, 2)
    HPReal arg = HPReal::pi(wp) * r;
    HPReal out(wp);
    mpfr_sin(out.get(), arg.get(), MPFR_RNDN);
    return out;
}

/// log Gamma(x) for x >= threshold via Stirling.
HPReal log_gamma_stirling(const HPReal& x, long target_bits)
{
    const long wp = x.precision();
    HPReal half(Rational(1, 2), wp);
    HPReal result = (x - half) * log(x) - x + log(HPReal::pi(wp) * 2) * Rational(1, 2);
    const HPReal eps = HPReal::pow2(-(target_bits + 16), wp);
    const HPReal x2 = x * x;
    HPReal xpow = x;  // x^(2j-1)
    HPReal prev_mag(wp);
    for (unsigned j = 1;; ++j) {
        const Rational coef = bernoulli(2 * j) / Rational(static_cast<long>(2 * j) * static_cast<long>(2 * j - 1));
        HPReal term = HPReal(coef, wp) / xpow;
        const HPReal mag = abs(term);
        if (j > 1 && mag > prev_mag) throw std::runtime_error("gamma: Stirling series diverged before target accuracy");
        if (mag < eps * abs(result)) break;
        result += term;
        prev_mag = mag;
        xpow *= x2;
    }
    return result;
}

HPReal gamma_positive(const HPReal& x, long target_bits)
{
    const long wp = target_bits + kGuardBits;
    HPReal y = x.with_precision(wp);
    const HPReal threshold(std::max(20L, target_bits / 5), wp);
    HPReal product(1, wp);
    while (y < threshold) {
        product *= y;
        y += HPReal(1, wp);
    }
    return exp(log_gamma_stirling(y, target_bits)) / product;
}

} // namespace

HPReal gamma(const HPReal& x)
{
    const long p = x.precision();
    if (is_nonpositive_integer(x)) throw std::domain_error("gamma: pole at nonpositive integer");
    const long wp = p + kGuardBits;
    const HPReal half(Rational(1, 2), wp);
    const HPReal xw = x.with_precision(wp);
    if (xw < half) {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        const HPReal g = gamma_positive(1 - xw, p);
        return (HPReal::pi(wp) / (sin_pi(xw) * g)).with_precision(p);
    }
    return gamma_positive(xw, p).with_precision(p);
}

HPReal rgamma(const HPReal& x)
{
    const long p = x.precision();
    if (is_nonpositive_integer(x)) return HPReal(p);
    const long wp = p + kGuardBits;
    const HPReal half(Rational(1, 2), wp);
    const HPReal xw = x.with_precision(wp);
    if (xw < half) {
        const HPReal g = gamma_positive(1 - xw, p);
        return (sin_pi(xw) * g / HPReal::pi(wp)).with_precision(p);
    }
    return (HPReal(1, wp) / gamma_positive(xw, p)).with_precision(p);
}

HPReal zeta(const HPReal& s)
{
    const long p = s.precision();
    const long wp = p + kGuardBits;
    const HPReal sw = s.with_precision(wp);
    if (!(sw > HPReal(1, wp))) throw std::domain_error("zeta: requires real s > 1");

    for (long m = std::max(10L, p / 4);; m *= 2) {
        const HPReal mm(m, wp);
        HPReal sum(wp);
        for (long n = 1; n < m; ++n) sum += pow(HPReal(n, wp), -sw);
        const HPReal m_pow = pow(mm, -sw);  // M^-s
        sum += mm * m_pow / (sw - 1);
        sum += m_pow * Rational(1, 2);

        // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * M^(-s-2j+1)
        const HPReal eps = HPReal::pow2(-(p + 16), wp);
        HPReal rising = sw;           // s(s+1)...(s+2j-2)
        HPReal mpow = m_pow / mm;     // M^(-s-2j+1)
        HPReal prev_mag(wp);
        bool converged = false;
        for (unsigned j = 1; j < 10000; ++j) {
            const Rational coef = bernoulli(2 * j) / Rational(factorial(2 * j));
            HPReal term = rising * mpow * coef;
            const HPReal mag = abs(term);
            if (j > 1 && mag > prev_mag) break;
            if (mag < eps * abs(sum)) {
                converged = true;
                break;
            }
            sum += term;
            prev_mag = mag;
            rising *= (sw + static_cast<long>(2 * j - 1)) * (sw + static_cast<long>(2 * j));
            mpow /= mm * mm;
        }
        if (converged) return sum.with_precision(p);
    }
}

} // namespace powerparts
