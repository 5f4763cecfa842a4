#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powerparts {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes,
/// and GMP keeps results of arithmetic canonical.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I>) {
            value_ = mpq_class(static_cast<long>(value));
        } else {
            value_ = mpq_class(static_cast<unsigned long>(value));
        }
    }

    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den = 1);
    explicit Rational(const mpq_class& q);

    /// Parses "p/q" or "p" (optional sign). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Value as a signed long; throws std::domain_error if not an integer in range.
    long to_long() const;
    double to_double() const { return value_.get_d(); }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    const mpq_class& mpq() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    mpq_class value_{0};
};

// Ring hooks used by the generic series and De Moivre code.
inline bool is_zero(const Rational& q) { return q.is_zero(); }
Rational unit_inverse(const Rational& q);
/// c^p when it is rational (exact integer roots of numerator and denominator), else nullopt.
std::optional<Rational> exact_rational_power(const Rational& c, const Rational& p);

} // namespace powerparts
