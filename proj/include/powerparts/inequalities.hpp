#pragma once

#include <string>
#include <utility>
#include <vector>

#include "powerparts/rational.hpp"

namespace powerparts {

/// Result of an exhaustive scan over [n_lo, n_hi].
struct InequalityReport {
    std::string property;
    long k = 1;
    long delta = 1;
    long n_lo = 0;
    long n_hi = 0;
    /// Smallest n0 in range with the property holding on [n0, n_hi]; n_hi + 1 if it fails at n_hi.
    long first_hold_from = 0;
    std::vector<long> violations;

    bool holds_from(long n0) const { return first_hold_from <= n0; }
    /// JSON with keys schema, property, k, delta, range, first_hold_from, empirical, violations.
    std::string to_json() const;
};

/// 2 p(n) <= p(n+delta) + p(n-delta) for n in [max(delta, 1), n_hi].
InequalityReport check_convexity(long k, long delta, long n_hi);

/// Log-concavity p(n)^2 >= p(n+delta) p(n-delta).
InequalityReport check_log_concavity(long k, long delta, long n_hi);

/// Strict sharpened bounds with factors (1 - n^-2), (1 + n^-2), n in [2, n_hi].
std::pair<InequalityReport, InequalityReport> check_ulas_sharpened(long k, long n_hi);

/// Original conjectured bounds with factors (1 - n^-k), (1 + n^-k), n in [2, n_hi].
std::pair<InequalityReport, InequalityReport> check_ulas_original(long k, long n_hi);

/// p(n+1)p(n-1)(2 sqrt6 n^(3/2) + pi) > p(n)^2 2 sqrt6 n^(3/2), n in [1, n_hi], decided by
/// directed-rounding interval arithmetic with precision widened until the sign is certain.
InequalityReport check_desalvo_pak(long n_hi, long start_precision = 192);

/// One residual row of the ratio expansions.
struct RatioResidual {
    long n = 0;
    double es = 0;   // (p(n+d)/p(n) - 1 - sum T_k(m,d)/(n+h)^(m/(k+1))) n^((2k+3)/(k+1))
    double ul = 0;   // symmetric average minus two terms, times n^2
    double ul2 = 0;  // log-concavity ratio minus two terms, times n^(2+1/(k+1))
};

/// Residuals at each n of n_set; uses T_k(m, delta) for m up to 2k+2 (k >= 2) or 4 (k = 1).
std::vector<RatioResidual> check_ratio_expansion(long k, long delta, const std::vector<long>& n_set,
                                                 long precision = 192);

} // namespace powerparts
