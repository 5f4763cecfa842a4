#include "powerparts/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace powerparts {

QPolynomial::QPolynomial(const Rational& c)
{
    if (!c.is_zero()) c_.push_back(c);
}

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::x() { return monomial(1, Rational(1)); }

QPolynomial QPolynomial::monomial(long e, const Rational& c)
{
    if (e < 0) throw std::invalid_argument("QPolynomial::monomial: negative exponent");
    std::vector<Rational> v(static_cast<std::size_t>(e + 1));
    v.back() = c;
    return QPolynomial(std::move(v));
}

Rational QPolynomial::operator[](long i) const
{
    if (i < 0 || i > degree()) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

Rational QPolynomial::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
    mpq_class tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            mpq_mul(tmp.get_mpq_t(), a.c_[i].mpq().get_mpq_t(), b.c_[j].mpq().get_mpq_t());
            mpq_add(out[i + j].get_mpq_t(), out[i + j].get_mpq_t(), tmp.get_mpq_t());
        }
    }
    std::vector<Rational> r;
    r.reserve(out.size());
    for (auto& v : out) r.emplace_back(v);
    return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator-() const
{
    QPolynomial r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

void QPolynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPolynomial unit_inverse(const QPolynomial& p)
{
    if (p.degree() != 0) throw std::domain_error("non-invertible constant term");
    return QPolynomial(unit_inverse(p[0]));
}

namespace {

struct NormalForm {
    Rational content;            // sign carried here
    std::vector<BigInt> primitive;  // leading coefficient positive
};

NormalForm normal_form(const std::vector<Rational>& c)
{
    BigInt den = 1;
    for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.denominator().get_mpz_t());
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& v : c) {
        ints.push_back(v.numerator() * (den / v.denominator()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (ints.back() < 0) g = -g;
    for (auto& v : ints) v /= g;
    return {Rational(g, den), std::move(ints)};
}

std::string primitive_text(const std::vector<BigInt>& p, const std::string& var, bool latex)
{
    std::ostringstream os;
    bool first = true;
    for (long e = static_cast<long>(p.size()) - 1; e >= 0; --e) {
        const BigInt& c = p[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (c < 0) os << '-';
        else if (!first) os << '+';
        first = false;
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e >= 1) os << var;
        if (e >= 2) {
            if (latex) os << "^{" << e << '}';
            else os << '^' << e;
        }
    }
    return os.str();
}

} // namespace

std::string QPolynomial::to_string(const std::string& var) const
{
    if (degree() <= 0) return (*this)[0].to_string();
    const auto nf = normal_form(c_);
    const BigInt num = nf.content.numerator();
    const BigInt den = nf.content.denominator();
    const std::string body = primitive_text(nf.primitive, var, false);
    if (num == 1 && den == 1) return body;
    std::string out = num < 0 ? "-" : "";
    const BigInt mag = abs(num);
    if (mag != 1) out += mag.get_str();
    out += "(" + body + ")";
    if (den != 1) out += "/" + den.get_str();
    return out;
}

std::string QPolynomial::to_latex(const std::string& var) const
{
    if (degree() <= 0) {
        const Rational c = (*this)[0];
        if (c.is_integer()) return c.to_string();
        return std::string(c.sign() < 0 ? "-" : "") + "\\frac{" + BigInt(abs(c.numerator())).get_str() + "}{" +
               c.denominator().get_str() + "}";
    }
    const auto nf = normal_form(c_);
    const BigInt num = nf.content.numerator();
    const BigInt den = nf.content.denominator();
    const std::string body = primitive_text(nf.primitive, var, true);
    std::string out = num < 0 ? "-" : "";
    const BigInt mag = abs(num);
    if (den == 1) {
        if (mag != 1) out += mag.get_str() + "\\left(" + body + "\\right)";
        else out += body;
        return out;
    }
    out += "\\frac{" + (mag != 1 ? mag.get_str() + "\\left(" + body + "\\right)" : body) + "}{" + den.get_str() + "}";
    return out;
}

} // namespace powerparts
