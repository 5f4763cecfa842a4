#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "powerparts/inequalities.hpp"

using namespace powerparts;

TEST_CASE("convexity and log-concavity for k = 1")
{
    const auto conv = check_convexity(1, 1, 500);
    CHECK(conv.first_hold_from == 1);
    CHECK(conv.violations.empty());
    const auto lc = check_log_concavity(1, 1, 500);
    CHECK(lc.first_hold_from == 26);
    CHECK(std::find(lc.violations.begin(), lc.violations.end(), 25) != lc.violations.end());
}

TEST_CASE("violations at small n are recorded")
{
    const auto [c, l] = check_ulas_sharpened(2, 400);
    CHECK_FALSE(c.violations.empty());
    CHECK(c.first_hold_from > 2);
    CHECK(c.first_hold_from == c.violations.back() + 1);
    CHECK(l.first_hold_from == l.violations.back() + 1);
}

TEST_CASE("sharpened bounds imply the original ones")
{
    for (long k = 2; k <= 3; ++k) {
        const auto [sc, sl] = check_ulas_sharpened(k, 1500);
        const auto [oc, ol] = check_ulas_original(k, 1500);
        for (const long n : oc.violations) CHECK(std::find(sc.violations.begin(), sc.violations.end(), n) != sc.violations.end());
        for (const long n : ol.violations) CHECK(std::find(sl.violations.begin(), sl.violations.end(), n) != sl.violations.end());
        CHECK(oc.first_hold_from <= sc.first_hold_from);
        CHECK(ol.first_hold_from <= sl.first_hold_from);
    }
}

TEST_CASE("DeSalvo-Pak inequality")
{
    const auto r = check_desalvo_pak(300);
    CHECK(r.first_hold_from == 45);
    CHECK_FALSE(r.violations.empty());
    CHECK(r.violations.back() == 44);
}

TEST_CASE("JSON report")
{
    const auto r = check_convexity(2, 1, 100);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["schema"] == 1);
    CHECK(j["property"] == r.property);
    CHECK(j["k"] == 2);
    CHECK(j["delta"] == 1);
    CHECK(j["range"].size() == 2);
    CHECK(j["first_hold_from"] == r.first_hold_from);
    CHECK(j["empirical"] == true);
    CHECK(j["violations"].size() == r.violations.size());
}

TEST_CASE("ratio expansion residuals stay bounded")
{
    const auto rows = check_ratio_expansion(2, 1, {1000, 4000, 16000});
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(std::isfinite(row.es));
        CHECK(std::abs(row.es) < 50);
    }
    CHECK(std::abs(rows[2].es) <= 2 * std::abs(rows[0].es) + 1);
    const auto k1 = check_ratio_expansion(1, 1, {1000, 4000, 16000});
    for (const auto& row : k1) CHECK(std::abs(row.es) < 50);
}

TEST_CASE("(ul) residual decays like n^-2")
{
    // k >= 3 is still dominated by secondary oscillating terms below n = 64000.
    for (long k = 1; k <= 2; ++k) {
        const auto rows = check_ratio_expansion(k, 1, {4000, 16000});
        // Scaled residuals carry n^2, so the raw ratio is scaled ratio / 16.
        const double raw = rows[1].ul / rows[0].ul / 16.0;
        CHECK(raw > 1.0 / 128);
        CHECK(raw < 1.0 / 2);
    }
}

TEST_CASE("log-concavity ratio falls below one for large n")
{
    const auto r = check_log_concavity(2, 1, 3000);
    CHECK(r.first_hold_from < 3000);
    const auto rows = check_ratio_expansion(2, 1, {4000});
    CHECK(std::isfinite(rows[0].ul2));
}
