#include "powerparts/expansion.hpp"

#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <tuple>

#include "powerparts/combinatorics.hpp"
#include "powerparts/demoivre.hpp"
#include "powerparts/series.hpp"
#include "powerparts/wright.hpp"

namespace powerparts {

namespace {

void check_k(long k)
{
    if (k < 1) throw std::invalid_argument("k must be positive");
}

void check_m(long m)
{
    if (m < 0) throw std::invalid_argument("index must be nonnegative");
}

std::vector<LaurentInA> q_star_list(long count, long k)
{
    std::vector<LaurentInA> out;
    for (long j = 1; j <= count; ++j) out.push_back(q_star(j, k));
    return out;
}

} // namespace

LaurentInA q_star(long r, long k)
{
    check_k(k);
    check_m(r);
    return LaurentInA::monomial(static_cast<int>(-r), q_r(r, Rational(k)) / Rational(k).pow(r));
}

LaurentInA c1(long m, const Rational& delta, long k)
{
    check_k(k);
    check_m(m);
    if (m == 0) return LaurentInA(Rational(1));
    std::vector<Rational> coeffs;  // binom(1/(k+1), j), j >= 1
    const Rational inv = Rational(1, k + 1);
    for (long j = 1; j <= m; ++j) coeffs.push_back(gen_binomial(inv, j));
    LaurentInA total;
    // m/(k+1) <= l <= m/k
    for (long l = (m + k) / (k + 1); l * k <= m; ++l) {
        const long e = (k + 1) * l - m;
        const Rational d = demoivre<Rational>(l, e, std::span<const Rational>(coeffs));
        if (d.is_zero()) continue;
        const Rational c = Rational(k + 1).pow(e) * delta.pow(l) / Rational(factorial(static_cast<unsigned long>(e))) * d;
        total += LaurentInA::monomial(static_cast<int>(e), c);
    }
    return total;
}

Rational c2(long m, const Rational& delta, long k)
{
    check_k(k);
    check_m(m);
    if (m % (k + 1) != 0) return Rational(0);
    const long q = m / (k + 1);
    return gen_binomial(Rational(-3, 2) + Rational(1, k + 1), q) * delta.pow(q);
}

LaurentInA c3(long m, const Rational& delta, long k)
{
    check_k(k);
    check_m(m);
    LaurentInA total;
    for (long l = 0; l * (k + 1) <= m; ++l) {
        const Rational b = gen_binomial(Rational(l) - Rational(m, k + 1), l) * delta.pow(l);
        if (b.is_zero()) continue;
        total += q_star(m - (k + 1) * l, k) * b;
    }
    return total;
}

LaurentInA c4(long m, long k)
{
    check_k(k);
    check_m(m);
    if (m == 0) return LaurentInA(Rational(1));
    const auto qs = q_star_list(m, k);
    LaurentInA total;
    for (long l = 1; l <= m; ++l) {
        const LaurentInA d = demoivre<LaurentInA>(m, l, std::span<const LaurentInA>(qs));
        total += l % 2 == 0 ? d : -d;
    }
    return total;
}

LaurentInA c4_via_inverse(long m, long k)
{
    check_k(k);
    check_m(m);
    TruncatedSeries<LaurentInA> s(static_cast<std::size_t>(m + 1));
    for (long r = 0; r <= m; ++r) s[static_cast<std::size_t>(r)] = q_star(r, k);
    return series_inverse(s)[static_cast<std::size_t>(m)];
}

namespace {

/// Memoized C1..C4 rows for one (k, delta) up to index r.
struct CRows {
    std::vector<LaurentInA> c1, c3, c4;
    std::vector<Rational> c2;
};

CRows rows(long r, const Rational& delta, long k, bool with_c4)
{
    CRows out;
    for (long j = 0; j <= r; ++j) {
        out.c1.push_back(c1(j, delta, k));
        out.c2.push_back(c2(j, delta, k));
        out.c3.push_back(c3(j, delta, k));
    }
    if (with_c4) {
        TruncatedSeries<LaurentInA> s(static_cast<std::size_t>(r + 1));
        for (long j = 0; j <= r; ++j) s[static_cast<std::size_t>(j)] = q_star(j, k);
        out.c4 = series_inverse(s).coeffs();
    }
    return out;
}

} // namespace

LaurentInA s_k(long r, const Rational& delta, long k)
{
    check_k(k);
    check_m(r);
    const auto c = rows(r, delta, k, false);
    LaurentInA total;
    for (long j1 = 0; j1 <= r; ++j1) {
        if (c.c1[static_cast<std::size_t>(j1)].is_zero()) continue;
        for (long j2 = 0; j1 + j2 <= r; ++j2) {
            const Rational& b = c.c2[static_cast<std::size_t>(j2)];
            if (b.is_zero()) continue;
            total += c.c1[static_cast<std::size_t>(j1)] * c.c3[static_cast<std::size_t>(r - j1 - j2)] * b;
        }
    }
    return total;
}

LaurentInA t_k(long r, const Rational& delta, long k)
{
    check_k(k);
    check_m(r);
    const auto c = rows(r, delta, k, true);
    LaurentInA total;
    for (long j1 = 0; j1 <= r; ++j1) {
        if (c.c1[static_cast<std::size_t>(j1)].is_zero()) continue;
        for (long j2 = 0; j1 + j2 <= r; ++j2) {
            const Rational& b = c.c2[static_cast<std::size_t>(j2)];
            if (b.is_zero()) continue;
            const LaurentInA head = c.c1[static_cast<std::size_t>(j1)] * b;
            for (long j3 = 0; j1 + j2 + j3 <= r; ++j3) {
                total += head * c.c3[static_cast<std::size_t>(j3)] * c.c4[static_cast<std::size_t>(r - j1 - j2 - j3)];
            }
        }
    }
    return total;
}

LaurentInA f_m(long m, long k)
{
    check_k(k);
    check_m(m);
    const long top = m - k - 1;
    if (top <= 0) return LaurentInA();
    TruncatedSeries<LaurentInA> s(static_cast<std::size_t>(top + 1));
    for (long j = 0; j <= top; ++j) s[static_cast<std::size_t>(j)] = q_star(j, k);
    const auto inv = series_inverse(s);
    LaurentInA total;
    for (long j = 1; j <= top; ++j) total += q_star(j, k) * inv[static_cast<std::size_t>(top - j)] * Rational(j);
    return total * Rational(-1, k + 1);
}

std::vector<std::pair<long, Rational>> omega_r_structure(long r)
{
    if (r < 0) throw std::invalid_argument("omega_r: r must be nonnegative");
    std::vector<std::pair<long, Rational>> out;
    if (r == 0) {
        out.emplace_back(0, Rational(1));
        return out;
    }
    for (long j = 0; 2 * j <= r + 1; ++j) {
        const Rational c = Rational(binomial(r + 1, j)) * Rational(r + 1 - j) /
                           Rational(factorial(static_cast<unsigned long>(r + 1 - 2 * j)));
        out.emplace_back(r - 2 * j, c);
    }
    return out;
}

HPReal omega_r(long r, long precision)
{
    const long wp = precision + 32;
    const auto terms = omega_r_structure(r);
    if (r == 0) return HPReal(1, precision);
    const HPReal pi6 = HPReal::pi(wp) / 6;
    HPReal sum(wp);
    for (const auto& [e, c] : terms) sum += pow(pi6, e) * c;
    const HPReal base = -(sqrt(HPReal(6, wp)) * 4);
    return (sum / pow(base, r)).with_precision(precision);
}

Rational d_r(long r)
{
    if (r < 0) throw std::invalid_argument("d_r: r must be nonnegative");
    if (r == 0) return Rational(1);
    Rational sum;
    for (long k = 0; k <= r + 1; ++k) {
        sum += Rational(binomial(2 * r, k)) * Rational(-2).pow(k) / Rational(factorial(static_cast<unsigned long>(r + 1 - k)));
    }
    return Rational(r + 1) * sum / Rational(-4).pow(r);
}

} // namespace powerparts
