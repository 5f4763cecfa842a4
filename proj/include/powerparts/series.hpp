#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "powerparts/combinatorics.hpp"
#include "powerparts/rational.hpp"

namespace powerparts {

/// Generic fallback for rational powers of a ring element: only the identity is handled.
template <class R>
std::optional<R> exact_rational_power(const R& c, const Rational& /*p*/)
{
    if (c == R(Rational(1))) return R(Rational(1));
    return std::nullopt;
}

/// Dense truncated power series c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N).
///
/// R is a commutative ring containing the rationals: it must be constructible from
/// Rational, support + - * among itself and * with Rational, and provide is_zero()
/// and unit_inverse() found by ADL. Coefficients at or beyond the order are unknown,
/// never implicitly zero, so binary operations truncate to the smaller order.
template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order, R(Rational(0)))
    {
        if (order == 0) throw std::invalid_argument("TruncatedSeries: order must be at least 1");
    }

    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: order must be at least 1");
    }

    static TruncatedSeries constant(const R& c, std::size_t order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }
    const R& operator[](std::size_t i) const { return coeffs_.at(i); }
    R& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const
    {
        if (order == 0 || order > coeffs_.size()) throw std::invalid_argument("TruncatedSeries::truncated: bad order");
        return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t i = 0; i < order(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t i = 0; i < order(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return *this;
    }

    TruncatedSeries& operator*=(const Rational& c)
    {
        for (auto& v : coeffs_) v = v * c;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (is_zero(b.coeffs_[j])) continue;
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    /// Series scaled by a ring element.
    TruncatedSeries scaled(const R& c) const
    {
        TruncatedSeries out(*this);
        for (auto& v : out.coeffs_) v = c * v;
        return out;
    }

    TruncatedSeries pow(unsigned long e) const
    {
        TruncatedSeries acc = constant(R(Rational(1)), order());
        TruncatedSeries base = *this;
        while (e > 0) {
            if (e & 1UL) acc = acc * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void shrink_to(std::size_t n)
    {
        if (n < coeffs_.size()) coeffs_.resize(n, R(Rational(0)));
    }

    std::vector<R> coeffs_;
};

/// Multiplicative inverse; the constant term must be a unit of R.
template <class R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& s)
{
    const std::size_t n = s.order();
    TruncatedSeries<R> g(n);
    const R inv0 = unit_inverse(s[0]);
    g[0] = inv0;
    for (std::size_t m = 1; m < n; ++m) {
        R acc(Rational(0));
        for (std::size_t j = 1; j <= m; ++j) {
            if (is_zero(s[j])) continue;
            acc = acc + s[j] * g[m - j];
        }
        g[m] = -(inv0 * acc);
    }
    return g;
}

/// exp(s) for a series with zero constant term.
template <class R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& s)
{
    if (!is_zero(s[0])) throw std::domain_error("series_exp: constant term must be zero");
    const std::size_t n = s.order();
    TruncatedSeries<R> g(n);
    g[0] = R(Rational(1));
    // n g_n = sum_{j=1}^{n} j s_j g_{n-j}
    for (std::size_t m = 1; m < n; ++m) {
        R acc(Rational(0));
        for (std::size_t j = 1; j <= m; ++j) {
            if (is_zero(s[j])) continue;
            acc = acc + s[j] * g[m - j] * Rational(static_cast<long>(j));
        }
        g[m] = acc * Rational(1, static_cast<long>(m));
    }
    return g;
}

/// log(s) for a series with constant term 1.
template <class R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& s)
{
    if (!(s[0] == R(Rational(1)))) throw std::domain_error("series_log: constant term must be 1");
    const std::size_t n = s.order();
    TruncatedSeries<R> g(n);
    for (std::size_t m = 1; m < n; ++m) {
        R acc(Rational(0));
        for (std::size_t j = 1; j < m; ++j) {
            if (is_zero(s[m - j])) continue;
            acc = acc + g[j] * s[m - j] * Rational(static_cast<long>(j));
        }
        g[m] = s[m] - acc * Rational(1, static_cast<long>(m));
    }
    return g;
}

/// s^alpha = s_0^alpha exp(alpha log(s/s_0)), computed by the J.C.P. Miller recurrence
/// g_m = (1/(m s_0)) sum_{j=1}^{m} ((alpha+1) j - m) s_j g_{m-j}.
/// Requires a unit constant term whose alpha-th power is in R.
template <class R>
TruncatedSeries<R> series_pow_rational(const TruncatedSeries<R>& s, const Rational& alpha)
{
    const std::size_t n = s.order();
    const auto lead = exact_rational_power(s[0], alpha);
    if (!lead) throw std::domain_error("series_pow_rational: constant term has no rational power");
    const R inv0 = unit_inverse(s[0]);
    TruncatedSeries<R> g(n);
    g[0] = *lead;
    const Rational a1 = alpha + Rational(1);
    for (std::size_t m = 1; m < n; ++m) {
        R acc(Rational(0));
        for (std::size_t j = 1; j <= m; ++j) {
            if (is_zero(s[j])) continue;
            const Rational w = a1 * Rational(static_cast<long>(j)) - Rational(static_cast<long>(m));
            if (w.is_zero()) continue;
            acc = acc + s[j] * g[m - j] * w;
        }
        g[m] = inv0 * acc * Rational(1, static_cast<long>(m));
    }
    return g;
}

/// (1+x)^alpha to the given order.
TruncatedSeries<Rational> series_binomial_pow(const Rational& alpha, std::size_t order);

/// ((1+sqrt(1+x))/2)^m: constant 1, coefficient (m/j) binom(m-j-1, j-1) / 4^j for j >= 1.
TruncatedSeries<Rational> genb_series(const Rational& m, std::size_t order);

} // namespace powerparts
