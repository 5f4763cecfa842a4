#include "powerparts/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace powerparts {

LaurentInA::LaurentInA(const Rational& c)
{
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentInA LaurentInA::monomial(int e, const Rational& c)
{
    LaurentInA x;
    x.add_term(e, c);
    return x;
}

Rational LaurentInA::coefficient(int e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

HPReal LaurentInA::evaluate(const HPReal& a) const
{
    HPReal acc(a.precision());
    for (const auto& [e, c] : terms_) acc += pow(a, e) * c;
    return acc;
}

void LaurentInA::add_term(int e, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentInA& LaurentInA::operator+=(const LaurentInA& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentInA& LaurentInA::operator-=(const LaurentInA& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentInA& LaurentInA::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentInA operator*(const LaurentInA& x, const LaurentInA& y)
{
    LaurentInA out;
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) out.add_term(ex + ey, cx * cy);
    }
    return out;
}

LaurentInA LaurentInA::operator-() const
{
    LaurentInA r(*this);
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

std::string LaurentInA::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << '-';
        first = false;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!(mag == Rational(1))) os << mag << '*';
        os << 'a';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentInA unit_inverse(const LaurentInA& x)
{
    if (!x.is_monomial()) throw std::domain_error("non-invertible constant term");
    const auto& [e, c] = *x.terms().begin();
    return LaurentInA::monomial(-e, unit_inverse(c));
}

} // namespace powerparts
