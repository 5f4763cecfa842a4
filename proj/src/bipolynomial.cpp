#include "powerparts/bipolynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace powerparts {

BiPolynomial::BiPolynomial(const Rational& c)
{
    if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

BiPolynomial BiPolynomial::rho() { return monomial(1, 0, Rational(1)); }
BiPolynomial BiPolynomial::beta() { return monomial(0, 1, Rational(1)); }

BiPolynomial BiPolynomial::monomial(int rho_deg, int beta_deg, const Rational& c)
{
    if (rho_deg < 0 || beta_deg < 0) throw std::invalid_argument("BiPolynomial::monomial: negative degree");
    BiPolynomial p;
    p.add_term({rho_deg, beta_deg}, c);
    return p;
}

BiPolynomial BiPolynomial::from_rho(const QPolynomial& p)
{
    BiPolynomial out;
    for (long i = 0; i <= p.degree(); ++i) out.add_term({static_cast<int>(i), 0}, p[i]);
    return out;
}

BiPolynomial BiPolynomial::from_beta(const QPolynomial& p)
{
    BiPolynomial out;
    for (long i = 0; i <= p.degree(); ++i) out.add_term({0, static_cast<int>(i)}, p[i]);
    return out;
}

Rational BiPolynomial::coefficient(int rho_deg, int beta_deg) const
{
    const auto it = terms_.find({rho_deg, beta_deg});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BiPolynomial::total_degree() const
{
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
    return d;
}

Rational BiPolynomial::evaluate(const Rational& rho, const Rational& beta) const
{
    Rational acc;
    for (const auto& [key, c] : terms_) acc += c * rho.pow(key.first) * beta.pow(key.second);
    return acc;
}

QPolynomial BiPolynomial::specialize_beta(const Rational& beta) const
{
    int max_rho = 0;
    for (const auto& [key, c] : terms_) max_rho = std::max(max_rho, key.first);
    std::vector<Rational> coeffs(static_cast<std::size_t>(max_rho + 1));
    for (const auto& [key, c] : terms_) coeffs[static_cast<std::size_t>(key.first)] += c * beta.pow(key.second);
    return QPolynomial(std::move(coeffs));
}

void BiPolynomial::add_term(const Key& key, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o)
{
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o)
{
    for (const auto& [key, c] : o.terms_) add_term(key, -c);
    return *this;
}

BiPolynomial& BiPolynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    int ra = 0, ba = 0, rb = 0, bb = 0;
    for (const auto& [key, c] : a.terms_) ra = std::max(ra, key.first), ba = std::max(ba, key.second);
    for (const auto& [key, c] : b.terms_) rb = std::max(rb, key.first), bb = std::max(bb, key.second);
    // Dense accumulator avoids repeated map lookups.
    const int nr = ra + rb + 1;
    const int nb = ba + bb + 1;
    std::vector<mpq_class> dense(static_cast<std::size_t>(nr * nb));
    mpq_class tmp;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            auto& slot = dense[static_cast<std::size_t>((ka.first + kb.first) * nb + ka.second + kb.second)];
            mpq_mul(tmp.get_mpq_t(), ca.mpq().get_mpq_t(), cb.mpq().get_mpq_t());
            mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
        }
    }
    BiPolynomial out;
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nb; ++j) {
            const auto& v = dense[static_cast<std::size_t>(i * nb + j)];
            if (sgn(v) != 0) out.terms_.emplace_hint(out.terms_.end(), BiPolynomial::Key{i, j}, Rational(v));
        }
    }
    return out;
}

BiPolynomial BiPolynomial::operator-() const
{
    BiPolynomial r(*this);
    for (auto& [key, v] : r.terms_) v = -v;
    return r;
}

std::string BiPolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << '-';
        first = false;
        const Rational mag = c.sign() < 0 ? -c : c;
        const bool bare = key.first == 0 && key.second == 0;
        if (bare || !(mag == Rational(1))) os << mag.to_string();
        if (key.first > 0) os << (bare || !(mag == Rational(1)) ? "*" : "") << "rho" << (key.first > 1 ? "^" + std::to_string(key.first) : "");
        if (key.second > 0) {
            os << ((key.first > 0 || !(mag == Rational(1))) ? "*" : "") << "beta"
               << (key.second > 1 ? "^" + std::to_string(key.second) : "");
        }
    }
    return os.str();
}

BiPolynomial unit_inverse(const BiPolynomial& p)
{
    if (p.terms().size() != 1 || p.terms().begin()->first != BiPolynomial::Key{0, 0}) {
        throw std::domain_error("non-invertible constant term");
    }
    return BiPolynomial(unit_inverse(p.terms().begin()->second));
}

} // namespace powerparts
