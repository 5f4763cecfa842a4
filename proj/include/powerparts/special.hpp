#pragma once

#include "powerparts/hpreal.hpp"

namespace powerparts {

/// Gamma at a real argument. Shift-up recursion to x >= max(20, p/5) followed by the
/// Stirling series, summed until the first omitted term (which bounds the
/// remainder for real x > 0) is below 2^-(p+16); reflection for x < 1/2.
/// Throws std::domain_error at nonpositive integers.
HPReal gamma(const HPReal& x);

/// 1/Gamma(x); exactly zero at nonpositive integers.
HPReal rgamma(const HPReal& x);

/// Riemann zeta for real s > 1 by Euler-Maclaurin: M-1 direct terms, the tail
/// integral, and Bernoulli corrections until the next correction is below 2^-(p+16)
/// relative. M grows with the precision so the corrections decrease.
HPReal zeta(const HPReal& s);

} // namespace powerparts
