#include "powerparts/inequalities.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "powerparts/asymptotic.hpp"
#include "powerparts/expansion.hpp"
#include "powerparts/hpreal.hpp"
#include "powerparts/partition.hpp"

namespace powerparts {

std::string InequalityReport::to_json() const
{
    const nlohmann::ordered_json j = {
        {"schema", 1},
        {"property", property},
        {"k", k},
        {"delta", delta},
        {"range", {n_lo, n_hi}},
        {"first_hold_from", first_hold_from},
        {"empirical", true},
        {"violations", violations},
    };
    return j.dump();
}

namespace {

InequalityReport scan(const std::string& property, long k, long delta, long lo, long hi,
                      const std::function<bool(long)>& holds)
{
    InequalityReport rep;
    rep.property = property;
    rep.k = k;
    rep.delta = delta;
    rep.n_lo = lo;
    rep.n_hi = hi;
    rep.first_hold_from = lo;
    for (long n = lo; n <= hi; ++n) {
        if (!holds(n)) {
            rep.violations.push_back(n);
            rep.first_hold_from = n + 1;
        }
    }
    return rep;
}

BigInt ipow(long n, long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(e));
    return r;
}

} // namespace

InequalityReport check_convexity(long k, long delta, long n_hi)
{
    if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
    const auto t = shared_table(k, n_hi + delta);
    const long lo = std::max(delta, 1L);
    return scan("convexity", k, delta, lo, n_hi, [&](long n) {
        return 2 * (*t)[n] <= (*t)[n + delta] + (*t)[n - delta];
    });
}

InequalityReport check_log_concavity(long k, long delta, long n_hi)
{
    if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
    const auto t = shared_table(k, n_hi + delta);
    const long lo = std::max(delta, 1L);
    return scan("log_concavity", k, delta, lo, n_hi, [&](long n) {
        return (*t)[n] * (*t)[n] >= (*t)[n + delta] * (*t)[n - delta];
    });
}

std::pair<InequalityReport, InequalityReport> check_ulas_sharpened(long k, long n_hi)
{
    const auto t = shared_table(k, n_hi + 1);
    auto conv = scan("ulas_sharpened_convexity", k, 1, 2, n_hi, [&](long n) {
        const BigInt n2 = ipow(n, 2);
        return 2 * (*t)[n] * n2 < ((*t)[n + 1] + (*t)[n - 1]) * (n2 - 1);
    });
    auto logc = scan("ulas_sharpened_log_concavity", k, 1, 2, n_hi, [&](long n) {
        const BigInt n2 = ipow(n, 2);
        return (*t)[n] * (*t)[n] * n2 > (*t)[n + 1] * (*t)[n - 1] * (n2 + 1);
    });
    return {std::move(conv), std::move(logc)};
}

std::pair<InequalityReport, InequalityReport> check_ulas_original(long k, long n_hi)
{
    const auto t = shared_table(k, n_hi + 1);
    auto conv = scan("ulas_original_convexity", k, 1, 2, n_hi, [&](long n) {
        const BigInt nk = ipow(n, k);
        return 2 * (*t)[n] * nk <= ((*t)[n + 1] + (*t)[n - 1]) * (nk - 1);
    });
    auto logc = scan("ulas_original_log_concavity", k, 1, 2, n_hi, [&](long n) {
        const BigInt nk = ipow(n, k);
        return (*t)[n] * (*t)[n] * nk >= (*t)[n + 1] * (*t)[n - 1] * (nk + 1);
    });
    return {std::move(conv), std::move(logc)};
}

namespace {

/// Closed interval [lo, hi] at a fixed precision with outward rounding.
struct Interval {
    HPReal lo, hi;
    explicit Interval(long p) : lo(p), hi(p) {}
};

Interval exact(const BigInt& v, long p)
{
    Interval r(p);
    mpfr_set_z(r.lo.get(), v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi.get(), v.get_mpz_t(), MPFR_RNDU);
    return r;
}

/// Product with a nonnegative interval b.
Interval mul_nonneg(const Interval& a, const Interval& b, long p)
{
    Interval r(p);
    // b >= 0: lower uses b.lo when a.lo >= 0, else b.hi.
    HPReal t1(p), t2(p);
    mpfr_mul(t1.get(), a.lo.get(), (a.lo.sign() >= 0 ? b.lo : b.hi).get(), MPFR_RNDD);
    mpfr_mul(t2.get(), a.hi.get(), (a.hi.sign() >= 0 ? b.hi : b.lo).get(), MPFR_RNDU);
    r.lo = t1;
    r.hi = t2;
    return r;
}

/// Sign of D * 2 sqrt6 n^(3/2) + pi P, or 0 if undecided at precision p.
int desalvo_sign(const BigInt& d, const BigInt& prod, long n, long p)
{
    // w = 2 sqrt(6) n^(3/2) = sqrt(24 n^3)
    Interval w(p);
    const BigInt w2 = 24 * ipow(n, 3);
    mpfr_set_z(w.lo.get(), w2.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(w.lo.get(), w.lo.get(), MPFR_RNDD);
    mpfr_set_z(w.hi.get(), w2.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(w.hi.get(), w.hi.get(), MPFR_RNDU);
    Interval pi(p);
    mpfr_const_pi(pi.lo.get(), MPFR_RNDD);
    mpfr_const_pi(pi.hi.get(), MPFR_RNDU);
    const Interval lhs = mul_nonneg(exact(d, p), w, p);
    const Interval rhs = mul_nonneg(exact(prod, p), pi, p);
    HPReal lo(p), hi(p);
    mpfr_add(lo.get(), lhs.lo.get(), rhs.lo.get(), MPFR_RNDD);
    mpfr_add(hi.get(), lhs.hi.get(), rhs.hi.get(), MPFR_RNDU);
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
}

} // namespace

InequalityReport check_desalvo_pak(long n_hi, long start_precision)
{
    const auto t = shared_table(1, n_hi + 1);
    constexpr long kMaxPrecision = 1 << 16;
    return scan("desalvo_pak", 1, 1, 1, n_hi, [&](long n) {
        const BigInt prod = (*t)[n + 1] * (*t)[n - 1];
        const BigInt d = prod - (*t)[n] * (*t)[n];
        for (long p = start_precision; p <= kMaxPrecision; p *= 2) {
            const int s = desalvo_sign(d, prod, n, p);
            if (s != 0) return s > 0;
        }
        throw std::runtime_error("check_desalvo_pak: sign undecided at maximum precision for n=" + std::to_string(n));
    });
}

std::vector<RatioResidual> check_ratio_expansion(long k, long delta, const std::vector<long>& n_set, long precision)
{
    if (k < 1) throw std::invalid_argument("k must be positive");
    long n_max = 0;
    for (long n : n_set) {
        if (n - delta < 0) throw std::invalid_argument("check_ratio_expansion: n - delta must be nonnegative");
        n_max = std::max(n_max, n + delta);
    }
    const auto t = shared_table(k, n_max);
    const AsymptoticConstants& c = constants(k, precision);
    const long m_top = k == 1 ? 4 : 2 * k + 2;
    std::vector<HPReal> tp, tm;
    for (long m = 0; m <= m_top; ++m) {
        tp.push_back(t_k(m, Rational(delta), k).evaluate(c.a));
        tm.push_back(t_k(m, Rational(-delta), k).evaluate(c.a));
    }
    const long p = precision;
    const HPReal a = c.a;
    const HPReal d2(delta * delta, p);
    const Rational inv = Rational(1, k + 1);
    std::vector<RatioResidual> out;
    for (long n : n_set) {
        const HPReal pn = from_bigint((*t)[n], p);
        const HPReal up = from_bigint((*t)[n + delta], p) / pn;
        const HPReal down = from_bigint((*t)[n - delta], p) / pn;
        const HPReal nh = HPReal(n, p) + HPReal(c.h, p);
        const HPReal nn(n, p);
        auto npow = [&](const Rational& e) { return pow(nh, HPReal(e, p)); };

        HPReal es = up - 1;
        for (long m = 1; m <= m_top; ++m) es -= tp[static_cast<std::size_t>(m)] / npow(Rational(m) * inv);
        es *= pow(nn, HPReal(Rational(2 * k + 3, k + 1), p));

        // (ul): 1/2 a^2 d^2 / N^(2-2/(k+1)) - (2 - 3/(2(k+1))) a d^2 / N^(2-1/(k+1))
        HPReal ul = (up + down) / 2 - 1;
        ul -= a * a * d2 / 2 / npow(Rational(2) - Rational(2) * inv);
        ul += a * d2 * HPReal(Rational(2) - Rational(3, 2) * inv, p) / npow(Rational(2) - inv);
        ul *= nn * nn;

        // (ul2): -(1 - 1/(k+1)) a d^2 / N^(2-1/(k+1)) + (3/2 - 1/(k+1)) d^2 / N^2
        HPReal ul2 = up * down - 1;
        ul2 += a * d2 * HPReal(Rational(1) - inv, p) / npow(Rational(2) - inv);
        ul2 -= d2 * HPReal(Rational(3, 2) - inv, p) / npow(Rational(2));
        ul2 *= pow(nn, HPReal(Rational(2) + inv, p));

        out.push_back({n, es.to_double(), ul.to_double(), ul2.to_double()});
    }
    return out;
}

} // namespace powerparts
