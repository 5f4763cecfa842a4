#pragma once

#include "powerparts/hpreal.hpp"
#include "powerparts/rational.hpp"

namespace powerparts {

struct AsymptoticConstants {
    long k = 1;
    long precision = kDefaultPrecision;
    HPReal c;  // Gamma(1+1/k) zeta(1+1/k) / k
    HPReal a;  // c^(k/(k+1))
    HPReal b;  // a / ((2 pi)^((k+1)/2) (1+1/k)^(1/2))
    Rational h;
};

/// Memoized per (k, precision).
const AsymptoticConstants& constants(long k, long precision = kDefaultPrecision);

/// M_k(n) = b exp((k+1) a (n+h)^(1/(k+1))) / (n+h)^(3/2-1/(k+1)); requires n+h > 0.
HPReal m_k(const HPReal& n, const AsymptoticConstants& c);

/// M_k(n) (1 + sum_{r=1}^{R-1} Q*_r(k) / (n+h)^(r/(k+1))).
HPReal q_kr_truncated(const HPReal& n, long R, const AsymptoticConstants& c);

/// b exp((k+1) a n^(1/(k+1))) / n^(3/2-1/(k+1)) (1 + sum S_k(r, h) / n^(r/(k+1))).
HPReal p_k_asymptotic_plain_n(const HPReal& n, long R, const AsymptoticConstants& c);

/// exp(pi sqrt(2n/3)) / (4 sqrt(3) n) (1 + sum_{r=1}^{R-1} omega_r / n^(r/2)).
HPReal p_omega(const HPReal& n, long R, long precision);

/// Y = 1 + 2 (2 pi^2/3 (n - 1/24) + 1/4)^(1/2).
HPReal brassesco_y(const HPReal& n);

/// (2 pi^2 / (3 sqrt 3)) e^((Y-1)/2) / Y^2 (1 + sum_{r=1}^{R-1} d_r / Y^r).
HPReal p_brassesco(const HPReal& n, long R, long precision);

/// Wright's function sum_l z^l / (l! Gamma(l rho + beta)), rho > 0, z >= 0. Stops after
/// 30 consecutive terms below 2^-precision of the partial sum, once terms decrease.
HPReal phi_series(const HPReal& rho, const HPReal& beta, const HPReal& z);

/// U^(1/2-beta) / sqrt(2 pi (rho+1)) exp((1+1/rho) U) (1 + sum_{r=1}^{R-1} rho^r W_r / U^r),
/// U = (rho N)^(1/(rho+1)), with exact W_r(rho, beta).
HPReal phi_asymptotic(const Rational& rho, const Rational& beta, const HPReal& n, long R);

/// p^k(n) (2 pi)^(k/2) (n+h)^(3/2) / phi(1/k, -1/2; k c (n+h)^(1/k)).
HPReal wright_partition_ratio(const BigInt& p, long n, const AsymptoticConstants& c);

/// Phi_k(sigma) = sum_m -log(1 - e^(-sigma m^k)) summed to precision.
HPReal phi_k_log(long k, const HPReal& sigma);

/// Phi*_k(sigma) = Phi_k - k c sigma^(-1/k) - 1/2 log(sigma/(2 pi)^k) - h sigma.
HPReal mellin_remainder(long k, const HPReal& sigma);

} // namespace powerparts
