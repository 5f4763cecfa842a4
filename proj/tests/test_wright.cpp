#include <doctest.h>

#include <random>

#include "powerparts/wright.hpp"

using namespace powerparts;

namespace {

Rational random_rational(std::mt19937_64& rng)
{
    Rational v;
    do {
        v = Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    } while (v == Rational(0) || v == Rational(-1));
    return v;
}

Rational double_factorial_odd(long j)  // (2j-1)!!
{
    Rational r(1);
    for (long i = 1; i <= 2 * j - 1; i += 2) r *= Rational(i);
    return r;
}

} // namespace

TEST_CASE("S series")
{
    const Rational rho(3, 5);
    const auto s = s_series(rho, 4);
    CHECK(s[0] == Rational(1));
    CHECK(s[1] == -(rho + Rational(2)) / Rational(3));
    CHECK(s[2] == (rho + Rational(2)) * (rho + Rational(3)) / Rational(12));
    const auto sp = s_series_poly(6);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 5; ++t) {
        const Rational r = random_rational(rng);
        const auto direct = s_series(r, 6);
        for (std::size_t j = 0; j < 6; ++j) CHECK(sp[j].evaluate(r) == direct[j]);
    }
    CHECK_THROWS(s_series(Rational(0), 3));
    CHECK_THROWS(s_series(Rational(-1), 3));
}

TEST_CASE("W_r examples")
{
    CHECK(w_via_series(0, Rational(2), Rational(3)) == Rational(1));
    CHECK(w_via_series(1, Rational(1), Rational(-1, 2)) == Rational(-1, 2));
    CHECK(w_via_series(1, Rational(1), Rational(1)) == Rational(1, 16));
}

TEST_CASE("W_r(1,1) matches the Bessel I0 asymptotic coefficients")
{
    // I0(x) ~ e^x / sqrt(2 pi x) sum_j ((2j-1)!!)^2 / (j! 8^j x^j), x = 2U.
    for (long j = 1; j <= 8; ++j) {
        const Rational expected = double_factorial_odd(j).pow(2) / (Rational(factorial(static_cast<unsigned long>(j))) * Rational(16).pow(j));
        CHECK(w_via_series(j, Rational(1), Rational(1)) == expected);
    }
}

TEST_CASE("three routes agree")
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 5; ++t) {
        const Rational rho = random_rational(rng);
        const Rational beta = random_rational(rng);
        for (long r = 0; r <= 6; ++r) {
            const Rational s = w_via_series(r, rho, beta);
            CHECK(w_via_sum(r, rho, beta) == s);
            CHECK(w_via_multinomial(r, rho, beta) == s);
        }
    }
}

TEST_CASE("V_r polynomial")
{
    std::mt19937_64 rng(8);
    for (long r = 1; r <= 6; ++r) {
        const auto v = v_bipoly(r);
        CHECK(v.total_degree() <= 2 * r);
        for (int t = 0; t < 3; ++t) {
            const Rational rho = random_rational(rng);
            const Rational beta = random_rational(rng);
            CHECK(v.evaluate(rho, beta) == w_via_series(r, rho, beta) * (rho * (rho + Rational(1))).pow(r));
        }
    }
}

TEST_CASE("Q_r and P_r")
{
    CHECK(q_r(1, Rational(2)) == Rational(-17, 18));
    CHECK(q_r(2, Rational(1)) == Rational(0));
    CHECK_THROWS(q_r(1, Rational(0)));
    CHECK_THROWS(q_r(1, Rational(-1)));
    CHECK(p_r_polynomial(1).to_string() == "-(11x^2+11x+2)/24");
    for (long r = 2; r <= 12; ++r) {
        CHECK(q_r(r, Rational(-2)) == Rational(0));
        CHECK(p_r_polynomial(r).evaluate(Rational(1)) == Rational(0));
    }
    std::mt19937_64 rng(4);
    for (long r = 1; r <= 5; ++r) {
        const auto p = p_r_polynomial(r);
        for (int t = 0; t < 2 * r + 2; ++t) {
            const Rational k = random_rational(rng);
            CHECK(q_r(r, k) == p.evaluate(k) / (k + Rational(1)).pow(r));
        }
    }
}
