#include "powerparts/wright.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "powerparts/combinatorics.hpp"
#include "powerparts/demoivre.hpp"

namespace powerparts {

namespace {

void check_rho(const Rational& rho)
{
    if (rho.is_zero() || rho == Rational(-1)) throw std::domain_error("rho must not be 0 or -1");
}

void check_r(long r)
{
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
}

/// r! binom(-1/2, r)
Rational leading_factor(long r)
{
    return Rational(factorial(static_cast<unsigned long>(r))) * gen_binomial(Rational(-1, 2), r);
}

/// w_j for j >= 1 as polynomials in rho; w[j-1] holds w_j.
std::vector<QPolynomial> w_polys(long count)
{
    std::vector<QPolynomial> w;
    QPolynomial num(Rational(1));
    for (long j = 1; j <= count; ++j) {
        num = num * (QPolynomial::x() + QPolynomial(Rational(j + 1)));
        w.push_back(num * Rational(BigInt(1), factorial(static_cast<unsigned long>(j + 2))));
    }
    return w;
}

/// A_{n,l}(w_1, w_2, ...) for n, l <= size, shared across r.
class WTable {
public:
    const std::vector<std::vector<QPolynomial>>& get(long size)
    {
        std::lock_guard lock(mutex_);
        if (size > size_) {
            const auto w = w_polys(size);
            table_ = demoivre_table<QPolynomial>(size, size, std::span<const QPolynomial>(w));
            size_ = size;
        }
        return table_;
    }

private:
    std::mutex mutex_;
    long size_ = -1;
    std::vector<std::vector<QPolynomial>> table_;
};

WTable& w_table()
{
    static WTable t;
    return t;
}

} // namespace

TruncatedSeries<Rational> s_series(const Rational& rho, std::size_t order)
{
    check_rho(rho);
    TruncatedSeries<Rational> s(order);
    const Rational denom = gen_binomial(-rho, 2);
    for (std::size_t j = 0; j < order; ++j) s[j] = gen_binomial(-rho, static_cast<long>(j) + 2) / denom;
    return s;
}

TruncatedSeries<QPolynomial> s_series_poly(std::size_t order)
{
    TruncatedSeries<QPolynomial> s(order);
    s[0] = QPolynomial(Rational(1));
    const auto w = w_polys(static_cast<long>(order));
    for (std::size_t j = 1; j < order; ++j) s[j] = w[j - 1] * Rational(j % 2 == 0 ? 2 : -2);
    return s;
}

Rational w_via_series(long r, const Rational& rho, const Rational& beta)
{
    check_r(r);
    check_rho(rho);
    if (r == 0) return Rational(1);
    const std::size_t order = static_cast<std::size_t>(2 * r + 1);
    const auto s_pow = series_pow_rational(s_series(rho, order), Rational(-1, 2) - Rational(r));
    const auto product = series_binomial_pow(-beta, order) * s_pow;
    return leading_factor(r) * gen_binomial(-rho, 2).pow(-r) * product[order - 1];
}

Rational w_via_sum(long r, const Rational& rho, const Rational& beta)
{
    check_r(r);
    check_rho(rho);
    if (r == 0) return Rational(1);
    const long n = 2 * r;
    std::vector<Rational> a;  // binom(-rho, 3), binom(-rho, 4), ...
    for (long j = 3; j < n + 3; ++j) a.push_back(gen_binomial(-rho, j));
    const auto table = demoivre_table<Rational>(n, n, std::span<const Rational>(a));
    const Rational b2 = gen_binomial(-rho, 2);
    std::vector<Rational> binom_beta;
    for (long v = 0; v <= n; ++v) binom_beta.push_back(gen_binomial(-beta, v));

    Rational total;
    for (long l = 0; l <= n; ++l) {
        Rational inner;
        for (long v = 0; v <= n - l; ++v) {
            const Rational& d = table[static_cast<std::size_t>(l)][static_cast<std::size_t>(n - v)];
            if (!d.is_zero()) inner += binom_beta[static_cast<std::size_t>(v)] * d;
        }
        if (inner.is_zero()) continue;
        total += gen_binomial(Rational(-1, 2) - Rational(r), l) * b2.pow(-r - l) * inner;
    }
    return leading_factor(r) * total;
}

Rational w_via_multinomial(long r, const Rational& rho, const Rational& beta)
{
    check_r(r);
    check_rho(rho);
    if (r == 0) return Rational(1);
    const Rational z = Rational(-1, 2) - Rational(r);
    const Rational scale = Rational(2) / (rho * (rho + Rational(1)));
    Rational total;
    for (long l = 0; l <= 2 * r; ++l) {
        const Rational outer = gen_binomial(Rational(3 * r) + Rational(1, 2), 2 * r - l) * scale.pow(r + l);
        if (outer.is_zero()) continue;
        const Rational zl = gen_binomial(z, l);
        Rational inner;
        for (long j1 = 0; j1 <= l; ++j1) {
            for (long j2 = 0; j1 + j2 <= l; ++j2) {
                const long j3 = l - j1 - j2;
                const Rational multi = zl * Rational(multinomial({j1, j2, j3}));
                const Rational b = gen_binomial(-Rational(j3) * rho - beta, 2 * r + 2 * l - j2);
                const Rational sign = j1 % 2 == 0 ? Rational(1) : Rational(-1);
                inner += multi * b * sign * rho.pow(j2);
            }
        }
        total += outer * inner;
    }
    return leading_factor(r) * total;
}

BiPolynomial v_bipoly(long r)
{
    check_r(r);
    static std::mutex mutex;
    static std::map<long, BiPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (const auto it = cache.find(r); it != cache.end()) return it->second;
    }
    BiPolynomial result(Rational(1));
    if (r > 0) {
        const long n = 2 * r;
        const auto& table = w_table().get(n);
        const Rational lead = leading_factor(r);
        const QPolynomial minus_beta = -QPolynomial::x();
        result = BiPolynomial();
        for (long v = 0; v <= n; ++v) {
            // U_v(rho) = sum_l binom(-1/2-r, l) 2^(r+l) (-1)^v A_{2r-v,l}(w)
            QPolynomial u;
            for (long l = 0; l <= n - v; ++l) {
                const QPolynomial& d = table[static_cast<std::size_t>(l)][static_cast<std::size_t>(n - v)];
                if (d.is_zero()) continue;
                const Rational c = gen_binomial(Rational(-1, 2) - Rational(r), l) * Rational(2).pow(r + l);
                u += d * c;
            }
            if (u.is_zero()) continue;
            u *= lead * Rational(v % 2 == 0 ? 1 : -1);
            result += BiPolynomial::from_beta(gen_binomial(minus_beta, v)) * BiPolynomial::from_rho(u);
        }
    }
    std::lock_guard lock(mutex);
    return cache.emplace(r, std::move(result)).first->second;
}

Rational q_r(long r, const Rational& k)
{
    check_r(r);
    if (k.is_zero() || k == Rational(-1)) throw std::domain_error("q_r: k must not be 0 or -1");
    static std::mutex mutex;
    static std::map<std::pair<long, Rational>, Rational> cache;
    const auto key = std::make_pair(r, k);
    {
        std::lock_guard lock(mutex);
        if (const auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const Rational value = w_via_series(r, Rational(1) / k, Rational(-1, 2));
    std::lock_guard lock(mutex);
    return cache.emplace(key, value).first->second;
}

QPolynomial p_r_polynomial(long r)
{
    check_r(r);
    const QPolynomial v = v_bipoly(r).specialize_beta(Rational(-1, 2));
    if (v.degree() > 2 * r) throw std::logic_error("p_r_polynomial: V_r degree exceeds 2r");
    std::vector<Rational> coeffs(static_cast<std::size_t>(2 * r + 1));
    for (long i = 0; i <= v.degree(); ++i) coeffs[static_cast<std::size_t>(2 * r - i)] = v[i];
    return QPolynomial(std::move(coeffs));
}

} // namespace powerparts
