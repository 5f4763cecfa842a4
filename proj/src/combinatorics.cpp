#include "powerparts/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace powerparts {

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long j)
{
    if (j < 0 || n < 0 || j > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return r;
}

template <>
Rational gen_binomial<Rational>(const Rational& z, long j)
{
    if (j < 0) throw std::invalid_argument("gen_binomial: negative lower index");
    // Falling factorial of p/q: prod (p - i q) / (q^j j!).
    const BigInt p = z.numerator();
    const BigInt q = z.denominator();
    BigInt num = 1;
    for (long i = 0; i < j; ++i) {
        num *= p - BigInt(i) * q;
        if (num == 0) return Rational(0);
    }
    BigInt qj;
    mpz_pow_ui(qj.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(j));
    return Rational(num, qj * factorial(static_cast<unsigned long>(j)));
}

BigInt multinomial(std::initializer_list<long> parts)
{
    long total = 0;
    BigInt den = 1;
    for (long p : parts) {
        if (p < 0) return 0;
        total += p;
        den *= factorial(static_cast<unsigned long>(p));
    }
    return factorial(static_cast<unsigned long>(total)) / den;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

} // namespace

Rational bernoulli(unsigned m)
{
    std::lock_guard lock(bernoulli_mutex);
    // sum_{j=0}^{n} binom(n+1, j) B_j = 0 for n >= 1
    while (bernoulli_cache.size() <= m) {
        const long n = static_cast<long>(bernoulli_cache.size());
        if (n >= 3 && n % 2 == 1) {
            bernoulli_cache.emplace_back(0);
            continue;
        }
        Rational s;
        for (long j = 0; j < n; ++j) {
            if (!bernoulli_cache[j].is_zero()) s += Rational(binomial(n + 1, j)) * bernoulli_cache[j];
        }
        bernoulli_cache.push_back(-s / Rational(n + 1));
    }
    return bernoulli_cache[m];
}

Rational h_k(long k)
{
    if (k < 1) throw std::invalid_argument("h_k: k must be positive");
    return -bernoulli(static_cast<unsigned>(k + 1)) / Rational(2 * (k + 1));
}

} // namespace powerparts
