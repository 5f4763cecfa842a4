#pragma once

#include <compare>
#include <ostream>
#include <string>

#include <mpfr.h>

#include "powerparts/rational.hpp"

namespace powerparts {

inline constexpr long kMinPrecision = 64;
inline constexpr long kDefaultPrecision = 192;

/// Owning MPFR value with an explicit precision in bits (at least 64).
/// Binary operations round to nearest at the larger operand precision.
class HPReal {
public:
    explicit HPReal(long precision = kDefaultPrecision);
    HPReal(long value, long precision);
    HPReal(const Rational& value, long precision);
    /// Decimal or scientific string.
    HPReal(const std::string& text, long precision);
    HPReal(const HPReal& o);
    HPReal(HPReal&& o) noexcept;
    HPReal& operator=(const HPReal& o);
    HPReal& operator=(HPReal&& o) noexcept;
    ~HPReal();

    static HPReal pi(long precision);
    /// 2^e at the given precision.
    static HPReal pow2(long e, long precision);

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    /// Copy rounded to a new precision.
    HPReal with_precision(long precision) const;

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Scientific notation with the given number of significant digits; 0 means
    /// the digit count implied by the precision.
    std::string to_string(int digits = 0) const;

    HPReal& operator+=(const HPReal& o);
    HPReal& operator-=(const HPReal& o);
    HPReal& operator*=(const HPReal& o);
    HPReal& operator/=(const HPReal& o);
    friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
    friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
    friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
    friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
    HPReal operator-() const;

    friend HPReal operator+(const HPReal& a, long b) { return a + HPReal(b, a.precision()); }
    friend HPReal operator-(const HPReal& a, long b) { return a - HPReal(b, a.precision()); }
    friend HPReal operator*(const HPReal& a, long b) { return a * HPReal(b, a.precision()); }
    friend HPReal operator/(const HPReal& a, long b) { return a / HPReal(b, a.precision()); }
    friend HPReal operator-(long a, const HPReal& b) { return HPReal(a, b.precision()) - b; }
    friend HPReal operator*(const HPReal& a, const Rational& b) { return a * HPReal(b, a.precision()); }

    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const HPReal& a, const HPReal& b);

    friend std::ostream& operator<<(std::ostream& os, const HPReal& x) { return os << x.to_string(); }

private:
    mpfr_t v_;
};

HPReal abs(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal log(const HPReal& x);
HPReal pow(const HPReal& x, const HPReal& y);
HPReal pow(const HPReal& x, long e);
HPReal floor(const HPReal& x);

/// |a/b - 1|.
HPReal relative_error(const HPReal& approx, const HPReal& exact);

/// Exact big integer as an HPReal.
HPReal from_bigint(const BigInt& n, long precision);

} // namespace powerparts
