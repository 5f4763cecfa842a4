#include <doctest.h>

#include "powerparts/combinatorics.hpp"
#include "powerparts/expansion.hpp"
#include "powerparts/wright.hpp"

using namespace powerparts;

namespace {

const LaurentInA A = LaurentInA::a();

LaurentInA qs(long r, long k)
{
    return q_star(r, k);
}

} // namespace

TEST_CASE("Q* and C1")
{
    CHECK(q_star(0, 3) == LaurentInA(Rational(1)));
    CHECK(q_star(1, 2) == LaurentInA::monomial(-1, Rational(-17, 18) / Rational(2)));
    CHECK(c1(0, Rational(5), 3) == LaurentInA(Rational(1)));
    for (long k = 1; k <= 5; ++k) {
        const Rational d(3);
        CHECK(c1(k, d, k) == A * d);
        CHECK(c1(2 * k, d, k) == A * A * (d * d / Rational(2)));
        for (long m = 1; m < 2 * k + 1; ++m) {
            if (m == k || m == 2 * k) continue;
            CHECK(c1(m, d, k).is_zero());
        }
        if (k >= 2) {
            CHECK(c1(2 * k + 1, d, k) == A * (-Rational(k) * d * d / Rational(2 * (k + 1))));
            if (k == 2) CHECK(c1(6, d, 2) == A * A * A * (d * d * d / Rational(6)));
            else CHECK(c1(2 * k + 2, d, k).is_zero());
        }
        for (long m = 1; m <= 8; ++m) CHECK(c1(m, Rational(0), k).is_zero());
    }
}

TEST_CASE("C2 and C3")
{
    for (long k = 1; k <= 5; ++k) {
        const Rational d(-2);
        const Rational e = Rational(1, k + 1) - Rational(3, 2);
        CHECK(c2(0, d, k) == Rational(1));
        CHECK(c2(k + 1, d, k) == e * d);
        CHECK(c2(2 * k + 2, d, k) == gen_binomial(e, 2) * d * d);
        for (long m = 1; m < 2 * k + 2; ++m) {
            if (m != k + 1) CHECK(c2(m, d, k) == Rational(0));
        }
        for (long m = 0; m <= 2 * k + 2; ++m) {
            LaurentInA expected = qs(m, k);
            if (m >= k + 2) expected += qs(m - k - 1, k) * ((Rational(1) - Rational(m, k + 1)) * d);
            CHECK(c3(m, d, k) == expected);
            CHECK(c3(m, Rational(0), k) == qs(m, k));
        }
    }
}

TEST_CASE("C4 routes and convolution")
{
    for (long k = 1; k <= 4; ++k) {
        CHECK(c4(0, k) == LaurentInA(Rational(1)));
        CHECK(c4(1, k) == -qs(1, k));
        for (long m = 0; m <= 12; ++m) {
            CHECK(c4(m, k) == c4_via_inverse(m, k));
            LaurentInA conv;
            for (long j = 0; j <= m; ++j) conv += qs(j, k) * c4(m - j, k);
            CHECK(conv == LaurentInA(Rational(m == 0 ? 1 : 0)));
        }
    }
}

TEST_CASE("F(m) and the C3*C4 identity")
{
    for (long k = 1; k <= 5; ++k) {
        for (long m = 0; m <= k + 1; ++m) CHECK(f_m(m, k).is_zero());
        CHECK(f_m(k + 2, k) == qs(1, k) * Rational(-1, k + 1));
        for (const long di : {-2L, -1L, 1L, 2L}) {
            const Rational d(di);
            for (long m = 0; m <= 2 * k + 2; ++m) {
                LaurentInA conv;
                for (long j = 0; j <= m; ++j) conv += c3(j, d, k) * c4(m - j, k);
                if (m <= k + 1) CHECK(conv == LaurentInA(Rational(m == 0 ? 1 : 0)));
                else CHECK(conv == f_m(m, k) * d);
            }
        }
    }
}

TEST_CASE("S_k")
{
    for (long k = 1; k <= 5; ++k) {
        for (long r = 0; r <= 6; ++r) CHECK(s_k(r, Rational(0), k) == qs(r, k));
    }
    for (long k = 2; k <= 6; ++k) {
        const Rational h = h_k(k);
        CHECK(s_k(1, h, k) == qs(1, k));
        LaurentInA expected = qs(2, k);
        if (k == 2) expected += A * h;
        CHECK(s_k(2, h, k) == expected);
    }
}

TEST_CASE("T_k low orders")
{
    for (long k = 2; k <= 5; ++k) {
        for (const long di : {-2L, -1L, 1L, 2L}) {
            const Rational d(di);
            CHECK(t_k(0, d, k) == LaurentInA(Rational(1)));
            for (long m = 1; m < k; ++m) CHECK(t_k(m, d, k).is_zero());
            CHECK(t_k(k, d, k) == A * d);
            CHECK(t_k(2 * k, d, k) == f_m(2 * k, k) * d + A * A * (d * d / Rational(2)));
        }
    }
    const Rational d(3);
    CHECK(t_k(2, d, 1) == LaurentInA(-d) + A * A * (d * d / Rational(2)));
}

TEST_CASE("omega and d")
{
    CHECK(d_r(0) == Rational(1));
    CHECK(d_r(1) == Rational(-1, 4));
    const long p = 256;
    const HPReal pi = HPReal::pi(p);
    const HPReal w1 = -(pi / 6 + HPReal(12, p) / pi) / (sqrt(HPReal(6, p)) * 4);
    CHECK(relative_error(omega_r(1, p), w1) < HPReal::pow2(-240, p));
    CHECK(omega_r(0, p) == HPReal(1, p));
    const auto st = omega_r_structure(2);
    CHECK(st.front().first == 2);
    const HPReal a1 = pi / sqrt(HPReal(6, p));
    for (long r = 1; r <= 4; ++r) {
        CHECK(relative_error(omega_r(r, p), s_k(r, Rational(-1, 24), 1).evaluate(a1)) < HPReal::pow2(-200, p));
    }
}
