#pragma once

#include <string>
#include <vector>

#include "powerparts/rational.hpp"

namespace powerparts {

/// Dense univariate polynomial over the rationals, trailing zeros trimmed.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit QPolynomial(std::vector<Rational> coeffs);

    static QPolynomial x();
    /// c x^e
    static QPolynomial monomial(long e, const Rational& c);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational operator[](long i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rational evaluate(const Rational& x) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const Rational& c);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const Rational& c) { return a *= c; }
    friend QPolynomial operator*(const Rational& c, QPolynomial a) { return a *= c; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial operator-() const;
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

    /// Canonical text, e.g. -(11x^2+11x+2)/24: rational content times a primitive
    /// integer polynomial with positive leading coefficient.
    std::string to_string(const std::string& var = "x") const;
    /// LaTeX form of the same normal form, e.g. -\frac{11x^{2}+11x+2}{24}.
    std::string to_latex(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

inline bool is_zero(const QPolynomial& p) { return p.is_zero(); }
/// Only nonzero constants are units.
QPolynomial unit_inverse(const QPolynomial& p);

} // namespace powerparts
