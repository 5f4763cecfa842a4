#pragma once

#include <map>
#include <string>
#include <utility>

#include "powerparts/polynomial.hpp"
#include "powerparts/rational.hpp"

namespace powerparts {

/// Sparse polynomial in rho and beta over the rationals. Keys are (rho degree, beta degree);
/// zero coefficients are never stored.
class BiPolynomial {
public:
    using Key = std::pair<int, int>;

    BiPolynomial() = default;
    BiPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)

    static BiPolynomial rho();
    static BiPolynomial beta();
    static BiPolynomial monomial(int rho_deg, int beta_deg, const Rational& c);
    /// Embeds a polynomial in rho.
    static BiPolynomial from_rho(const QPolynomial& p);
    /// Embeds a polynomial in beta.
    static BiPolynomial from_beta(const QPolynomial& p);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(int rho_deg, int beta_deg) const;
    /// -1 for the zero polynomial.
    int total_degree() const;

    Rational evaluate(const Rational& rho, const Rational& beta) const;
    /// Polynomial in rho obtained by fixing beta.
    QPolynomial specialize_beta(const Rational& beta) const;

    BiPolynomial& operator+=(const BiPolynomial& o);
    BiPolynomial& operator-=(const BiPolynomial& o);
    BiPolynomial& operator*=(const Rational& c);
    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
    friend BiPolynomial operator*(BiPolynomial a, const Rational& c) { return a *= c; }
    friend BiPolynomial operator*(const Rational& c, BiPolynomial a) { return a *= c; }
    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
    BiPolynomial operator-() const;
    friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) = default;

    std::string to_string() const;

private:
    void add_term(const Key& key, const Rational& c);
    std::map<Key, Rational> terms_;
};

inline bool is_zero(const BiPolynomial& p) { return p.is_zero(); }
BiPolynomial unit_inverse(const BiPolynomial& p);

} // namespace powerparts
