#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "raneycore/numbers.hpp"
#include "raneycore/verify.hpp"

using namespace raneycore;

TEST_CASE("conjecture_rhs") {
    CHECK(conjecture_rhs(6, 2) == 12);
    CHECK(conjecture_rhs(4, 2) == 3);
    for (int s = 1; s <= 10; ++s) CHECK(conjecture_rhs(s, 1) == catalan(s));
    CHECK_THROWS_AS(conjecture_rhs(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_rhs(4, 0), std::invalid_argument);
}

TEST_CASE("conjecture_rhs equals raney(p+1, r+1, k)") {
    for (int s = 1; s <= 10; ++s) {
        for (int p = 1; p <= s + 1; ++p) {
            const int k = s / p;
            const int r = s % p;
            CHECK(conjecture_rhs(s, p) == raney(p + 1, r + 1, k));
        }
    }
}

TEST_CASE("count_filtered_cores examples") {
    CHECK(count_filtered_cores(6, 2, FilterMethod::direct) == 12);
    CHECK(count_filtered_cores(4, 2, FilterMethod::ideal_property) == 3);
    for (auto method : {FilterMethod::direct, FilterMethod::ideal_property,
                        FilterMethod::recurrence}) {
        CHECK(count_filtered_cores(3, 5, method) == 1);  // p > s: only the empty core
        CHECK(count_filtered_cores(5, 1, method) == catalan(5));
    }
    CHECK_THROWS_AS(count_filtered_cores(0, 2, FilterMethod::direct), std::invalid_argument);
    CHECK_THROWS_AS(count_filtered_cores(4, 0, FilterMethod::direct), std::invalid_argument);
}

TEST_CASE("enumeration bound") {
    CHECK_THROWS_AS(count_filtered_cores(13, 2, FilterMethod::direct),
                    EnumerationBoundError);
    CHECK_THROWS_AS(count_filtered_cores(13, 2, FilterMethod::ideal_property),
                    EnumerationBoundError);
    try {
        count_filtered_cores(13, 2, FilterMethod::direct);
        FAIL("expected EnumerationBoundError");
    } catch (const EnumerationBoundError& e) {
        CHECK(std::string(e.what()).find("12") != std::string::npos);
    }
    // the recurrence route has no bound, and the bound itself is configurable
    CHECK(count_filtered_cores(13, 2, FilterMethod::recurrence) == raney(3, 2, 6));
    CHECK_THROWS_AS(count_filtered_cores(5, 2, FilterMethod::direct, 4),
                    EnumerationBoundError);
    CHECK(count_filtered_cores(5, 2, FilterMethod::direct, 5) == raney(3, 2, 2));
    CHECK_THROWS_AS(verify_main_theorem(13, 2), EnumerationBoundError);
}

TEST_CASE("all routes agree up to s = 10") {
    for (int s = 1; s <= 10; ++s) {
        for (int p = 1; p <= s + 1; ++p) {
            const Natural expected = raney(p + 1, s % p + 1, s / p);
            CHECK(count_filtered_cores(s, p, FilterMethod::direct) == expected);
            CHECK(count_filtered_cores(s, p, FilterMethod::ideal_property) == expected);
            CHECK(count_filtered_cores(s, p, FilterMethod::recurrence) == expected);
        }
    }
}

TEST_CASE("max_core_size") {
    {
        const auto [size, witnesses] = max_core_size(3, 4);
        CHECK(size == 5);
        CHECK(witnesses == 1);
    }
    {
        const auto [size, witnesses] = max_core_size(2, 3);
        CHECK(size == 1);
        CHECK(witnesses == 1);
    }
    {
        const auto [size, witnesses] = max_core_size(1, 2);
        CHECK(size == 0);
        CHECK(witnesses == 1);
    }
    for (int s = 1; s <= 8; ++s) {
        for (int t = s + 1; t <= 9; ++t) {
            if (std::gcd(s, t) != 1) continue;
            const auto [size, witnesses] = max_core_size(s, t);
            CHECK(size == Natural(s * s - 1) * (t * t - 1) / 24);
            CHECK(witnesses == 1);
        }
    }
}

TEST_CASE("count_self_conjugate_cores") {
    CHECK(count_self_conjugate_cores(3, 4) == 3);
    CHECK(count_self_conjugate_cores(2, 3) == 2);
    CHECK(count_self_conjugate_cores(1, 2) == 1);
    CHECK(count_self_conjugate_cores(1, 7) == 1);
    for (int s = 1; s <= 8; ++s) {
        for (int t = s + 1; t <= 9; ++t) {
            if (std::gcd(s, t) != 1) continue;
            CHECK(count_self_conjugate_cores(s, t) ==
                  Natural(oracles::pascal_binomial(s / 2 + t / 2, s / 2)));
        }
    }
}

TEST_CASE("verify_main_theorem") {
    const VerificationReport report = verify_main_theorem(6, 6);
    CHECK(report.all_agree);

    // cases ordered by (s, p), one per valid pair
    int expected_cases = 0;
    for (int s = 1; s <= 6; ++s) expected_cases += std::min(6, s + 1);
    CHECK(static_cast<int>(report.cases.size()) == expected_cases);
    for (std::size_t i = 1; i < report.cases.size(); ++i) {
        const auto& prev = report.cases[i - 1];
        const auto& cur = report.cases[i];
        CHECK((prev.s < cur.s || (prev.s == cur.s && prev.p < cur.p)));
    }

    bool saw_6_2 = false;
    for (const auto& c : report.cases) {
        CHECK(c.s == c.k * c.p + c.r);
        CHECK(c.r >= 0);
        CHECK(c.r < c.p);
        CHECK(c.agree);
        if (c.s == 6 && c.p == 2) {
            saw_6_2 = true;
            CHECK(c.count_enumeration == 12);
            CHECK(c.count_recurrence == 12);
            CHECK(c.count_raney == 12);
            CHECK(c.rhs_conjecture == 12);
        }
    }
    CHECK(saw_6_2);

    const VerificationReport tiny = verify_main_theorem(1, 1);
    REQUIRE(tiny.cases.size() == 1);
    CHECK(tiny.cases[0].count_enumeration == 1);
    CHECK(tiny.cases[0].count_raney == 1);
    CHECK(tiny.all_agree);

    const VerificationReport mid = verify_main_theorem(4, 2);
    bool saw_4_2 = false;
    for (const auto& c : mid.cases)
        if (c.s == 4 && c.p == 2) {
            saw_4_2 = true;
            CHECK(c.count_raney == 3);
        }
    CHECK(saw_4_2);
}

TEST_CASE("verification report JSON shape") {
    const VerificationReport report = verify_main_theorem(3, 3);
    const auto doc = nlohmann::json::parse(report_to_json(report));
    REQUIRE(doc.contains("cases"));
    REQUIRE(doc.contains("summary"));
    CHECK(doc["summary"]["all_agree"] == true);
    REQUIRE(doc["cases"].is_array());
    REQUIRE(!doc["cases"].empty());
    for (const auto& c : doc["cases"]) {
        for (const char* field : {"s", "p", "k", "r"}) CHECK(c[field].is_number_integer());
        for (const char* field :
             {"count_enumeration", "count_recurrence", "count_raney", "rhs_conjecture"})
            CHECK(c[field].is_string());  // exact decimal strings
        CHECK(c["agree"].is_boolean());
    }
    const auto& first = doc["cases"][0];
    CHECK(first["s"] == 1);
    CHECK(first["p"] == 1);
    CHECK(first["count_raney"] == "1");
}

TEST_CASE("oracle report") {
    const OracleReport report = verify_oracles(9);
    CHECK(report.all_agree);
    int coprime_pairs = 0;
    for (int s = 1; s <= 8; ++s)
        for (int t = s + 1; t <= 9; ++t)
            if (std::gcd(s, t) == 1) ++coprime_pairs;
    CHECK(static_cast<int>(report.cases.size()) == coprime_pairs);
    for (const auto& c : report.cases) {
        CHECK(c.agree);
        CHECK(c.max_size_witnesses == 1);
    }
    const auto doc = nlohmann::json::parse(oracle_report_to_json(report));
    CHECK(doc["summary"]["all_agree"] == true);
    CHECK(doc["cases"].size() == report.cases.size());
}
