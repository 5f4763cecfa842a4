#pragma once

#include <initializer_list>
#include <stdexcept>

#include "powerparts/rational.hpp"

namespace powerparts {

BigInt factorial(unsigned long n);

/// Ordinary binomial coefficient for integer arguments, zero outside 0 <= j <= n.
BigInt binomial(long n, long j);

/// z(z-1)...(z-j+1)/j!, for any ring R over the rationals (Rational, BiPolynomial, ...).
/// j = 0 gives 1.
template <class R>
R gen_binomial(const R& z, long j)
{
    if (j < 0) throw std::invalid_argument("gen_binomial: negative lower index");
    R acc(Rational(1));
    for (long i = 0; i < j; ++i) {
        acc = acc * (z - R(Rational(i)));
    }
    return acc * Rational(BigInt(1), factorial(static_cast<unsigned long>(j)));
}

template <>
Rational gen_binomial<Rational>(const Rational& z, long j);

/// Multinomial coefficient (j1+...+jm)! / (j1!...jm!).
BigInt multinomial(std::initializer_list<long> parts);

/// Bernoulli number B_m with the B_1 = -1/2 convention (memoized, thread-safe).
Rational bernoulli(unsigned m);

/// h_k = zeta(-k)/2 = -B_{k+1}/(2(k+1)).
Rational h_k(long k);

} // namespace powerparts
