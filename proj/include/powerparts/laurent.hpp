#pragma once

#include <map>
#include <string>

#include "powerparts/hpreal.hpp"
#include "powerparts/rational.hpp"

namespace powerparts {

/// Laurent polynomial sum_e c_e a^e over the rationals in a single symbol a.
/// Zero coefficients are never stored.
class LaurentInA {
public:
    LaurentInA() = default;
    LaurentInA(const Rational& c);  // NOLINT(google-explicit-constructor)

    /// c a^e
    static LaurentInA monomial(int e, const Rational& c = Rational(1));
    static LaurentInA a() { return monomial(1); }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(int e) const;
    bool is_monomial() const { return terms_.size() == 1; }

    HPReal evaluate(const HPReal& a) const;

    LaurentInA& operator+=(const LaurentInA& o);
    LaurentInA& operator-=(const LaurentInA& o);
    LaurentInA& operator*=(const Rational& c);
    friend LaurentInA operator+(LaurentInA x, const LaurentInA& y) { return x += y; }
    friend LaurentInA operator-(LaurentInA x, const LaurentInA& y) { return x -= y; }
    friend LaurentInA operator*(LaurentInA x, const Rational& c) { return x *= c; }
    friend LaurentInA operator*(const Rational& c, LaurentInA x) { return x *= c; }
    friend LaurentInA operator*(const LaurentInA& x, const LaurentInA& y);
    LaurentInA operator-() const;
    friend bool operator==(const LaurentInA& x, const LaurentInA& y) = default;

    /// e.g. "1/2*a^2 - a + 3/4*a^-1"; "0" when empty.
    std::string to_string() const;

private:
    void add_term(int e, const Rational& c);
    std::map<int, Rational> terms_;
};

inline bool is_zero(const LaurentInA& x) { return x.is_zero(); }
/// Monomials are the units.
LaurentInA unit_inverse(const LaurentInA& x);

} // namespace powerparts
