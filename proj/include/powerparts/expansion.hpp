#pragma once

#include <vector>

#include "powerparts/hpreal.hpp"
#include "powerparts/laurent.hpp"
#include "powerparts/rational.hpp"

namespace powerparts {

// All coefficients live in Q[a, 1/a] with a standing for a_k.

/// Q*_r(k) = Q_r(k) / (k a)^r.
LaurentInA q_star(long r, long k);

/// Coefficient of n^(-m/(k+1)) in exp(alpha((n+delta)^(1/(k+1)) - n^(1/(k+1)))), alpha = (k+1)a.
LaurentInA c1(long m, const Rational& delta, long k);

/// Coefficient of n^(-m/(k+1)) in (n/(n+delta))^(3/2-1/(k+1)).
Rational c2(long m, const Rational& delta, long k);

/// Coefficient of n^(-m/(k+1)) in sum_r Q*_r(k) (n+delta)^(-r/(k+1)).
LaurentInA c3(long m, const Rational& delta, long k);

/// Coefficient of n^(-m/(k+1)) in (sum_r Q*_r(k) n^(-r/(k+1)))^-1, by the De Moivre sum.
LaurentInA c4(long m, long k);

/// Same coefficient via the series inverse.
LaurentInA c4_via_inverse(long m, long k);

/// S_k(r, delta) = sum_{j1+j2+j3=r} C1 C2 C3.
LaurentInA s_k(long r, const Rational& delta, long k);

/// T_k(r, delta) = sum_{j1+j2+j3+j4=r} C1 C2 C3 C4.
LaurentInA t_k(long r, const Rational& delta, long k);

/// F(m) = -1/(k+1) sum_{j=1}^{m-k-1} j Q*_j(k) C4(m-k-1-j).
LaurentInA f_m(long m, long k);

/// omega_r from its closed form in pi; omega_0 = 1.
HPReal omega_r(long r, long precision);

/// Exact structure of omega_r: omega_r = (-4 sqrt 6)^-r sum_e c_e (pi/6)^e, returned as
/// pairs (e, c_e) with e = r - 2k possibly negative.
std::vector<std::pair<long, Rational>> omega_r_structure(long r);

/// d_r = ((r+1)/(-4)^r) sum_{k=0}^{r+1} binom(2r, k) (-2)^k / (r+1-k)!; d_0 = 1.
Rational d_r(long r);

} // namespace powerparts
