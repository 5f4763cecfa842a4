#include "powerparts/hpreal.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace powerparts {

namespace {

long checked(long precision)
{
    if (precision < kMinPrecision) throw std::invalid_argument("HPReal: precision below 64 bits");
    if (precision > MPFR_PREC_MAX) throw std::invalid_argument("HPReal: precision too large");
    return precision;
}

} // namespace

HPReal::HPReal(long precision)
{
    mpfr_init2(v_, checked(precision));
    mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long value, long precision) : HPReal(precision) { mpfr_set_si(v_, value, MPFR_RNDN); }

HPReal::HPReal(const Rational& value, long precision) : HPReal(precision)
{
    mpfr_set_q(v_, value.mpq().get_mpq_t(), MPFR_RNDN);
}

HPReal::HPReal(const std::string& text, long precision) : HPReal(precision)
{
    if (mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0) throw std::invalid_argument("HPReal: bad number " + text);
}

HPReal::HPReal(const HPReal& o)
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept
{
    // Leave the source valid but minimal.
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

HPReal& HPReal::operator=(const HPReal& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept
{
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

HPReal HPReal::pi(long precision)
{
    HPReal r(precision);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::pow2(long e, long precision)
{
    HPReal r(1, precision);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

HPReal HPReal::with_precision(long precision) const
{
    HPReal r(precision);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string HPReal::to_string(int digits) const
{
    if (digits <= 0) digits = static_cast<int>(std::floor(static_cast<double>(precision()) * std::log10(2.0)));
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    const std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    const int len = mpfr_snprintf(nullptr, 0, fmt.c_str(), v_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

namespace {

void grow_to(mpfr_ptr v, mpfr_srcptr o)
{
    if (mpfr_get_prec(o) > mpfr_get_prec(v)) mpfr_prec_round(v, mpfr_get_prec(o), MPFR_RNDN);
}

} // namespace

HPReal& HPReal::operator+=(const HPReal& o)
{
    grow_to(v_, o.v_);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator-=(const HPReal& o)
{
    grow_to(v_, o.v_);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator*=(const HPReal& o)
{
    grow_to(v_, o.v_);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal& HPReal::operator/=(const HPReal& o)
{
    grow_to(v_, o.v_);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HPReal HPReal::operator-() const
{
    HPReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const HPReal& a, const HPReal& b)
{
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

HPReal abs(const HPReal& x)
{
    HPReal r(x);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

HPReal sqrt(const HPReal& x)
{
    HPReal r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HPReal exp(const HPReal& x)
{
    HPReal r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HPReal log(const HPReal& x)
{
    HPReal r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HPReal pow(const HPReal& x, const HPReal& y)
{
    HPReal r(std::max(x.precision(), y.precision()));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

HPReal pow(const HPReal& x, long e)
{
    HPReal r(x.precision());
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

HPReal floor(const HPReal& x)
{
    HPReal r(x.precision());
    mpfr_floor(r.get(), x.get());
    return r;
}

HPReal relative_error(const HPReal& approx, const HPReal& exact)
{
    return abs(approx / exact - 1);
}

HPReal from_bigint(const BigInt& n, long precision)
{
    HPReal r(precision);
    mpfr_set_z(r.get(), n.get_mpz_t(), MPFR_RNDN);
    return r;
}

} // namespace powerparts
