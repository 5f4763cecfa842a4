#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "powerparts/partition.hpp"

using namespace powerparts;

TEST_CASE("small values")
{
    const auto t1 = count_table(1, 100);
    CHECK(t1[0] == 1);
    CHECK(t1[10] == 42);
    CHECK(t1[100] == BigInt("190569292"));
    const auto t2 = count_table(2, 30);
    CHECK(t2[9] == 4);
    CHECK(t2[12] == 5);
    CHECK(t2[4] == 2);
    CHECK(count_table(3, 0)[0] == 1);
    CHECK(count_table(3, 0).values.size() == 1);
}

TEST_CASE("table agrees with enumeration")
{
    for (long k = 1; k <= 4; ++k) {
        const auto t = count_table(k, 60);
        for (long n = 0; n <= 60; ++n) CHECK(t[n] == enumerate_oracle(k, n));
    }
    CHECK_THROWS(enumerate_oracle(1, 121));
}

TEST_CASE("pentagonal recurrence")
{
    const long n_max = 3000;
    const auto t = count_table(1, n_max);
    for (long n = 1; n <= n_max; ++n) {
        BigInt s = 0;
        for (long j = 1;; ++j) {
            const long g1 = j * (3 * j - 1) / 2;
            if (g1 > n) break;
            const long g2 = j * (3 * j + 1) / 2;
            const BigInt term = t[n - g1] + (g2 <= n ? t[n - g2] : BigInt(0));
            if (j % 2) s += term; else s -= term;
        }
        CHECK(t[n] == s);
    }
}

TEST_CASE("generating function identity")
{
    // prod_m (1 - x^(m^k)) * sum p^k(n) x^n = 1 up to the truncation order.
    for (long k = 1; k <= 4; ++k) {
        const long n_max = 400;
        const auto t = count_table(k, n_max);
        std::vector<BigInt> prod(t.values.begin(), t.values.end());
        for (long m = 1;; ++m) {
            long part = 1;
            for (long i = 0; i < k; ++i) part *= m;
            if (part > n_max) break;
            for (long n = n_max; n >= part; --n) prod[static_cast<std::size_t>(n)] -= prod[static_cast<std::size_t>(n - part)];
        }
        CHECK(prod[0] == 1);
        bool rest_zero = true;
        for (long n = 1; n <= n_max; ++n) rest_zero = rest_zero && prod[static_cast<std::size_t>(n)] == 0;
        CHECK(rest_zero);
    }
}

TEST_CASE("shared table")
{
    const auto a = shared_table(2, 50);
    const auto b = shared_table(2, 200);
    CHECK(b->limit >= 200);
    CHECK((*a)[50] == (*b)[50]);
    CHECK((*shared_table(2, 10))[9] == 4);
}

TEST_CASE("csv and binary round trip")
{
    const auto t = count_table(3, 40);
    std::ostringstream csv;
    write_csv(t, csv);
    const std::string s = csv.str();
    CHECK(s.rfind("0,1\n", 0) == 0);
    CHECK(s.find(std::string("40,") + t[40].get_str() + "\n") != std::string::npos);

    std::stringstream bin;
    write_binary(t, bin);
    CHECK(bin.str().substr(0, 4) == "PPKT");
    const auto back = read_binary(bin);
    CHECK(back.k == 3);
    CHECK(back.limit == 40);
    CHECK(back.values == t.values);

    std::stringstream bad("XXXX");
    CHECK_THROWS(read_binary(bad));
}

TEST_CASE("guards")
{
    CHECK_THROWS_AS(count_table(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(count_table(1, -1), std::invalid_argument);
    CHECK(max_table_size(1) == 2000000);
    CHECK(max_table_size(2) == 200000);
    setenv("POWERPARTS_MAX_N", "100", 1);
    CHECK(max_table_size(3) == 100);
    CHECK_THROWS_AS(count_table(1, 101), ResourceGuardError);
    unsetenv("POWERPARTS_MAX_N");
    CHECK_NOTHROW(count_table(1, 101));
}
