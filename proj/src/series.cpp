#include "powerparts/series.hpp"

namespace powerparts {

TruncatedSeries<Rational> series_binomial_pow(const Rational& alpha, std::size_t order)
{
    TruncatedSeries<Rational> s(order);
    for (std::size_t j = 0; j < order; ++j) s[j] = gen_binomial(alpha, static_cast<long>(j));
    return s;
}

TruncatedSeries<Rational> genb_series(const Rational& m, std::size_t order)
{
    TruncatedSeries<Rational> s(order);
    s[0] = Rational(1);
    Rational four_j(1);
    for (std::size_t j = 1; j < order; ++j) {
        const long jl = static_cast<long>(j);
        four_j *= Rational(4);
        s[j] = m / Rational(jl) * gen_binomial(m - Rational(jl + 1), jl - 1) / four_j;
    }
    return s;
}

} // namespace powerparts
