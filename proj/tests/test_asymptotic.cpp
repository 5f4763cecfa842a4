#include <doctest.h>

#include "powerparts/asymptotic.hpp"
#include "powerparts/partition.hpp"
#include "powerparts/special.hpp"

using namespace powerparts;

namespace {

HPReal mpfr_reference_gamma(const HPReal& x)
{
    HPReal r(x.precision());
    mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HPReal mpfr_reference_zeta(const HPReal& x)
{
    HPReal r(x.precision());
    mpfr_zeta(r.get(), x.get(), MPFR_RNDN);
    return r;
}

// I0(2 sqrt N) = sum N^l / (l!)^2
HPReal bessel_i0_series(long n, long p)
{
    HPReal sum(0L, p);
    HPReal term(1L, p);
    for (long l = 0; l < 2000; ++l) {
        if (l > 0) term = term * n / (l * l);
        sum += term;
        if (l > n && term < sum * HPReal::pow2(-(p + 8), p)) break;
    }
    return sum;
}

} // namespace

TEST_CASE("gamma and zeta against MPFR")
{
    for (const long p : {64L, 192L, 512L}) {
        const HPReal tol = HPReal::pow2(-(p - 6), p);
        for (const char* s : {"0.5", "1", "1.5", "2.25", "7", "19.75", "33.3", "-0.5", "-2.7", "0.001", "100.125"}) {
            const HPReal x(std::string(s), p);
            CHECK(relative_error(gamma(x), mpfr_reference_gamma(x)) < tol);
        }
        for (const char* s : {"1.01", "1.25", "1.5", "2", "3", "4.5", "10", "50"}) {
            const HPReal x(std::string(s), p);
            CHECK(relative_error(zeta(x), mpfr_reference_zeta(x)) < tol);
        }
    }
    CHECK_THROWS(gamma(HPReal(-3L, 128)));
    CHECK(rgamma(HPReal(-3L, 128)).is_zero());
    CHECK(rgamma(HPReal(0L, 128)).is_zero());
    CHECK_THROWS(zeta(HPReal(1L, 128)));
}

TEST_CASE("precision consistency")
{
    const long p = 192;
    const HPReal x(std::string("2.5"), p);
    const HPReal hi = gamma(x.with_precision(p + 64));
    CHECK(relative_error(gamma(x), hi.with_precision(p)) < HPReal::pow2(-(p - 8), p));
    const auto& c = constants(3, p);
    const auto& c_hi = constants(3, p + 64);
    CHECK(relative_error(c.a, c_hi.a.with_precision(p)) < HPReal::pow2(-(p - 8), p));
    CHECK(relative_error(c.b, c_hi.b.with_precision(p)) < HPReal::pow2(-(p - 8), p));
}

TEST_CASE("constants for k = 1")
{
    const long p = 256;
    const auto& c = constants(1, p);
    const HPReal pi = HPReal::pi(p);
    CHECK(relative_error(c.c, pi * pi / 6) < HPReal::pow2(-240, p));
    CHECK(relative_error(c.a, pi / sqrt(HPReal(6L, p))) < HPReal::pow2(-240, p));
    CHECK(relative_error(c.b, HPReal(1L, p) / (sqrt(HPReal(3L, p)) * 4)) < HPReal::pow2(-240, p));
    CHECK(c.h == Rational(-1, 24));
    CHECK(constants(2, p).h == Rational(0));
}

TEST_CASE("M_k and truncations")
{
    const long p = 192;
    const auto& c = constants(1, p);
    const HPReal n(1000L, p);
    CHECK(q_kr_truncated(n, 1, c) == m_k(n, c));
    CHECK_THROWS(m_k(HPReal(-1L, p), c));
    const auto table = count_table(1, 1000);
    const HPReal exact = from_bigint(table[1000], p);
    CHECK(relative_error(q_kr_truncated(n, 3, c), exact) < HPReal(std::string("1e-15"), p));
    CHECK(relative_error(p_k_asymptotic_plain_n(n, 3, c), exact) < HPReal(std::string("1e-3"), p));
    CHECK(relative_error(p_omega(n, 4, p), exact) < HPReal(std::string("1e-5"), p));
    CHECK(relative_error(p_brassesco(n, 3, p), exact) < HPReal(std::string("1e-5"), p));
    CHECK(brassesco_y(n) > HPReal(1L, p));
}

TEST_CASE("Wright function series")
{
    const long p = 192;
    const HPReal one(1L, p);
    for (const long n : {1L, 10L, 100L}) {
        const HPReal v = phi_series(one, one, HPReal(n, p));
        CHECK(relative_error(v, bessel_i0_series(n, p)) < HPReal::pow2(-180, p));
    }
    const HPReal beta(std::string("2.5"), p);
    CHECK(relative_error(phi_series(one, beta, HPReal(0L, p)), rgamma(beta)) < HPReal::pow2(-180, p));

    // phi(rho, beta-1; z) = rho z phi(rho, rho+beta; z) + (beta-1) phi(rho, beta; z)
    const HPReal rho(std::string("0.5"), p);
    const HPReal b(std::string("0.5"), p);
    for (const long z : {1L, 7L, 40L}) {
        const HPReal zz(z, p);
        const HPReal lhs = phi_series(rho, b - one, zz);
        const HPReal rhs = rho * zz * phi_series(rho, rho + b, zz) + (b - one) * phi_series(rho, b, zz);
        CHECK(relative_error(lhs, rhs) < HPReal::pow2(-170, p));
    }
    const HPReal mhalf(std::string("-0.5"), p);
    for (const long z : {1L, 10L, 100L}) CHECK(phi_series(rho, mhalf, HPReal(z, p)).sign() > 0);
}

TEST_CASE("Wright function asymptotics")
{
    const long p = 192;
    const HPReal rho(std::string("0.5"), p);
    const HPReal beta(std::string("-0.5"), p);
    const HPReal n1(100L, p);
    const HPReal n2(10000L, p);
    const HPReal e1 = relative_error(phi_asymptotic(Rational(1, 2), Rational(-1, 2), n1, 3), phi_series(rho, beta, n1));
    const HPReal e2 = relative_error(phi_asymptotic(Rational(1, 2), Rational(-1, 2), n2, 3), phi_series(rho, beta, n2));
    CHECK(e2 < e1);
    const auto& c = constants(2, p);
    const auto table = count_table(2, 500);
    const HPReal ratio = wright_partition_ratio(table[500], 500, c);
    CHECK(abs(ratio - 1) < HPReal(std::string("1e-3"), p));
}

TEST_CASE("Mellin remainder for k = 1 is tiny")
{
    const long p = 256;
    // Phi_1 = pi^2/(6 s) + log(s/2pi)/2 - s/24 + Phi_1(4 pi^2/s)
    const HPReal s(std::string("0.125"), p);
    const HPReal pi = HPReal::pi(p);
    const HPReal dual = phi_k_log(1, pi * pi * 4 / s);
    CHECK(abs(mellin_remainder(1, s) - dual) < HPReal::pow2(-220, p));
    CHECK_THROWS(phi_k_log(1, HPReal(0L, p)));
}
