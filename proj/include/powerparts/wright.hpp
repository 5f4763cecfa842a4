#pragma once

#include <cstddef>

#include "powerparts/bipolynomial.hpp"
#include "powerparts/polynomial.hpp"
#include "powerparts/rational.hpp"
#include "powerparts/series.hpp"

namespace powerparts {

/// S(rho, x) = ((1+x)^-rho - 1 + rho x) / (binom(-rho, 2) x^2) to order N;
/// coefficient j is binom(-rho, j+2)/binom(-rho, 2). Rejects rho in {0, -1}.
TruncatedSeries<Rational> s_series(const Rational& rho, std::size_t order);

/// S(rho, x) with coefficients as polynomials in rho: 2 (-1)^j w_j,
/// w_j = (rho+2)...(rho+j+1)/(j+2)!.
TruncatedSeries<QPolynomial> s_series_poly(std::size_t order);

/// W_r(rho, beta) = r! binom(-1/2, r) binom(-rho, 2)^-r [x^2r] (1+x)^-beta S(rho, x)^(-1/2-r).
Rational w_via_series(long r, const Rational& rho, const Rational& beta);

/// Double sum over l and v with De Moivre polynomials of binom(-rho, j), j >= 3.
Rational w_via_sum(long r, const Rational& rho, const Rational& beta);

/// Closed form in binomial and multinomial coefficients only.
Rational w_via_multinomial(long r, const Rational& rho, const Rational& beta);

/// V_r(rho, beta) with W_r = V_r / (rho^r (rho+1)^r); memoized.
BiPolynomial v_bipoly(long r);

/// Q_r(k) = W_r(1/k, -1/2); memoized. Rejects k in {0, -1}.
Rational q_r(long r, const Rational& k);

/// P_r(x) with Q_r(k) = P_r(k)/(k+1)^r, read off V_r(rho, -1/2) by rho -> 1/x; memoized.
QPolynomial p_r_polynomial(long r);

} // namespace powerparts
