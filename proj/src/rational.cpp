#include "powerparts/rational.hpp"

#include <stdexcept>

namespace powerparts {

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
    const auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    const auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') throw bad();
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return BigInt(digits, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash)), den);
}

long Rational::to_long() const
{
    if (!is_integer() || !value_.get_num().fits_slong_p()) {
        throw std::domain_error("Rational::to_long: " + to_string() + " is not a machine integer");
    }
    return value_.get_num().get_si();
}

Rational Rational::pow(long e) const
{
    if (e < 0) {
        if (is_zero()) throw std::domain_error("Rational::pow: zero to a negative power");
        return unit_inverse(*this).pow(-e);
    }
    BigInt n;
    BigInt d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational unit_inverse(const Rational& q)
{
    if (q.is_zero()) throw std::domain_error("non-invertible constant term");
    return Rational(q.denominator(), q.numerator());
}

std::optional<Rational> exact_rational_power(const Rational& c, const Rational& p)
{
    if (p.is_integer()) {
        if (c.is_zero() && p.sign() < 0) return std::nullopt;
        return c.pow(p.to_long());
    }
    if (c.is_zero()) {
        return p.sign() > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    }
    const BigInt& q = p.denominator();
    if (!q.fits_ulong_p()) return std::nullopt;
    const unsigned long root = q.get_ui();
    BigInt num = c.numerator();
    const bool negative = num < 0;
    if (negative) {
        if (root % 2 == 0) return std::nullopt;
        num = -num;
    }
    BigInt rn;
    BigInt rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), root) == 0) return std::nullopt;
    const BigInt den = c.denominator();
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), root) == 0) return std::nullopt;
    if (negative) rn = -rn;
    const BigInt& e = p.numerator();
    if (!e.fits_slong_p()) return std::nullopt;
    return Rational(rn, rd).pow(e.get_si());
}

} // namespace powerparts
