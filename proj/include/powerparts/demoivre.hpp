#pragma once

#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "powerparts/combinatorics.hpp"
#include "powerparts/series.hpp"

namespace powerparts {

namespace detail {

template <class R>
TruncatedSeries<R> generating_series(std::span<const R> a, long n)
{
    // a_1 x + a_2 x^2 + ... up to x^n
    TruncatedSeries<R> s(static_cast<std::size_t>(n + 1));
    for (long j = 1; j <= n && j <= static_cast<long>(a.size()); ++j) s[static_cast<std::size_t>(j)] = a[j - 1];
    return s;
}

} // namespace detail

/// De Moivre polynomial A_{n,k}(a_1, a_2, ...): the coefficient of x^n in
/// (a_1 x + a_2 x^2 + ...)^k. a[0] holds a_1. Zero when n < k; A_{n,0} = [n == 0].
template <class R>
R demoivre(long n, long k, std::span<const R> a)
{
    if (k < 0) throw std::invalid_argument("demoivre: k must be nonnegative");
    if (n < k) return R(Rational(0));
    if (k == 0) return R(Rational(n == 0 ? 1 : 0));
    if (static_cast<long>(a.size()) < n - k + 1) {
        throw std::invalid_argument("demoivre: need coefficients a_1..a_{n-k+1}");
    }
    // Only a_1..a_{n-k+1} can reach x^n with k factors.
    const auto base = detail::generating_series(a.first(static_cast<std::size_t>(n - k + 1)), n);
    return base.pow(static_cast<unsigned long>(k))[static_cast<std::size_t>(n)];
}

template <class R>
R demoivre(long n, long k, const std::vector<R>& a)
{
    return demoivre<R>(n, k, std::span<const R>(a));
}

/// All A_{n,l}(a) for 0 <= n <= n_max, 0 <= l <= l_max, as table[l][n].
/// Built by repeated multiplication, so a must supply a_1..a_{n_max}.
template <class R>
std::vector<std::vector<R>> demoivre_table(long n_max, long l_max, std::span<const R> a)
{
    if (n_max < 0 || l_max < 0) throw std::invalid_argument("demoivre_table: negative bound");
    if (l_max > 0 && static_cast<long>(a.size()) < n_max) {
        throw std::invalid_argument("demoivre_table: need coefficients a_1..a_{n_max}");
    }
    const auto base = detail::generating_series(a, n_max);
    std::vector<std::vector<R>> table;
    table.reserve(static_cast<std::size_t>(l_max + 1));
    auto power = TruncatedSeries<R>::constant(R(Rational(1)), static_cast<std::size_t>(n_max + 1));
    for (long l = 0; l <= l_max; ++l) {
        if (l > 0) power = power * base;
        table.push_back(power.coeffs());
    }
    return table;
}

/// Minimum list length for A_{m,l}(a_{r+1}, a_{r+2}, ...): a_1..a_{r+m-l+1}.
inline long shifted_demoivre_required_length(long m, long l, long r)
{
    return m < l ? 0 : r + m - l + 1;
}

/// A_{m,l}(a_{r+1}, a_{r+2}, ...) expressed through unshifted De Moivre polynomials:
/// sum over j_1+...+j_{r+1} = l of multinomial(l; j) prod_{i<=r} (-a_i)^{j_i}
/// A_{m+J+r j_{r+1}, j_{r+1}}(a_1, a_2, ...), with J = sum_{i<r} (r-i) j_i.
template <class R>
R shifted_demoivre(long m, long l, long r, std::span<const R> a)
{
    if (l < 0 || r < 0) throw std::invalid_argument("shifted_demoivre: l and r must be nonnegative");
    if (m < l) return R(Rational(0));
    if (r == 0) return demoivre<R>(m, l, a);
    if (static_cast<long>(a.size()) < shifted_demoivre_required_length(m, l, r)) {
        throw std::invalid_argument("shifted_demoivre: coefficient list too short");
    }
    // neg_pow[i][e] = (-a_{i+1})^e
    std::vector<std::vector<R>> neg_pow(static_cast<std::size_t>(r));
    for (long i = 0; i < r; ++i) {
        auto& row = neg_pow[static_cast<std::size_t>(i)];
        row.push_back(R(Rational(1)));
        for (long e = 1; e <= l; ++e) row.push_back(row.back() * (-a[i]));
    }
    // Entries past the required length cancel, so zero padding is harmless.
    const long n_max = m + r * l;
    std::vector<R> padded(a.begin(), a.begin() + shifted_demoivre_required_length(m, l, r));
    while (static_cast<long>(padded.size()) < n_max) padded.push_back(R(Rational(0)));
    const auto table = demoivre_table<R>(n_max, l, std::span<const R>(padded));

    R total(Rational(0));
    std::vector<long> parts(static_cast<std::size_t>(r + 1), 0);
    std::function<void(long, long)> walk = [&](long idx, long remaining) {
        if (idx == r) {
            parts[static_cast<std::size_t>(r)] = remaining;
            const long last = remaining;
            long shift = 0;
            for (long i = 0; i < r - 1; ++i) shift += (r - 1 - i) * parts[static_cast<std::size_t>(i)];
            const long index = m + shift + r * last;
            const R& inner = table[static_cast<std::size_t>(last)][static_cast<std::size_t>(index)];
            if (is_zero(inner)) return;
            BigInt coef = factorial(static_cast<unsigned long>(l));
            R term = inner;
            for (long i = 0; i <= r; ++i) coef /= factorial(static_cast<unsigned long>(parts[static_cast<std::size_t>(i)]));
            for (long i = 0; i < r; ++i) {
                term = term * neg_pow[static_cast<std::size_t>(i)][static_cast<std::size_t>(parts[static_cast<std::size_t>(i)])];
            }
            total = total + term * Rational(coef);
            return;
        }
        for (long j = 0; j <= remaining; ++j) {
            parts[static_cast<std::size_t>(idx)] = j;
            walk(idx + 1, remaining - j);
        }
    };
    walk(0, l);
    return total;
}

/// Checks the shift, homogeneity and graded-homogeneity identities of A_{n,k} at the
/// given arguments: A_{n,k}(0, a) = A_{n-k,k}(a); A_{n,k}(c a) = c^k A_{n,k}(a);
/// A_{n,k}(c a_1, c^2 a_2, ...) = c^n A_{n,k}(a).
template <class R>
std::array<bool, 3> demoivre_identities_check(long n, long k, const R& c, std::span<const R> a)
{
    std::vector<R> shifted{R(Rational(0))};
    shifted.insert(shifted.end(), a.begin(), a.end());
    std::vector<R> scaled;
    std::vector<R> graded;
    R cj(Rational(1));
    for (const auto& v : a) {
        cj = cj * c;
        scaled.push_back(c * v);
        graded.push_back(cj * v);
    }
    const auto pow_ring = [&](long e) {
        R p(Rational(1));
        for (long i = 0; i < e; ++i) p = p * c;
        return p;
    };
    const R base = demoivre<R>(n, k, a);
    const bool gsb = demoivre<R>(n, k, std::span<const R>(shifted)) == demoivre<R>(n - k, k, a);
    const bool mulk = demoivre<R>(n, k, std::span<const R>(scaled)) == pow_ring(k) * base;
    const bool muln = demoivre<R>(n, k, std::span<const R>(graded)) == pow_ring(std::max(n, 0L)) * base;
    return {gsb, mulk, muln};
}

} // namespace powerparts
