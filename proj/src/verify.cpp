#include "raneycore/verify.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "raneycore/numbers.hpp"
#include "raneycore/partition.hpp"
#include "raneycore/poset.hpp"

namespace raneycore {

namespace {

void check_bound(int s, int bound, const char* what) {
    if (s > bound)
        throw EnumerationBoundError(std::string(what) + ": enumeration bound " +
                                    std::to_string(bound) + " exceeded (s = " +
                                    std::to_string(s) + ")");
}

nlohmann::json natural_to_json(const Natural& n) { return to_decimal(n); }

}  // namespace

Natural conjecture_rhs(int s, int p) {
    detail::check_arg(s >= 1, "conjecture_rhs: s must be positive");
    detail::check_arg(p >= 1, "conjecture_rhs: p must be positive");
    const int quot = s / p;
    const Natural numerator = (s + 1 - static_cast<long long>(p) * quot) *
                              binomial(static_cast<long long>(s) + quot, s);
    detail::require(numerator % (s + 1) == 0, "conjecture_rhs: s+1 must divide the numerator");
    return numerator / (s + 1);
}

Natural count_filtered_cores(int s, int p, FilterMethod method, int bound) {
    detail::check_arg(s >= 1, "count_filtered_cores: s must be positive");
    detail::check_arg(p >= 1, "count_filtered_cores: p must be positive");
    switch (method) {
        case FilterMethod::direct: {
            check_bound(s, bound, "count_filtered_cores[direct]");
            Natural count = 0;
            enumerate_core_partitions(s, s + 1, [&](const Partition& lambda) {
                if (all_parts_multiple_of(lambda, p)) ++count;
            });
            return count;
        }
        case FilterMethod::ideal_property:
            check_bound(s, bound, "count_filtered_cores[ideal_property]");
            return count_ideals_with_property_enumerated(s, p);
        case FilterMethod::recurrence:
            return count_ideals_with_property_recurrence(s, p);
    }
    detail::require(false, "count_filtered_cores: unknown method");
    return 0;
}

MaxCoreSize max_core_size(int s, int t, int bound) {
    check_bound(std::max(s, t), bound + 1, "max_core_size");
    MaxCoreSize out;
    out.max_size = 0;
    out.witness_count = 0;
    enumerate_core_partitions(s, t, [&](const Partition& lambda) {
        const Natural size = lambda.size();
        if (size > out.max_size) {
            out.max_size = size;
            out.witness_count = 1;
        } else if (size == out.max_size) {
            ++out.witness_count;
        }
    });
    return out;
}

Natural count_self_conjugate_cores(int s, int t, int bound) {
    check_bound(std::max(s, t), bound + 1, "count_self_conjugate_cores");
    Natural count = 0;
    enumerate_core_partitions(s, t, [&](const Partition& lambda) {
        if (conjugate(lambda) == lambda) ++count;
    });
    return count;
}

VerificationReport verify_main_theorem(int s_max, int p_max, int bound) {
    detail::check_arg(s_max >= 1, "verify_main_theorem: s_max must be positive");
    detail::check_arg(p_max >= 1, "verify_main_theorem: p_max must be positive");
    check_bound(s_max, bound, "verify_main_theorem");

    VerificationReport report;
    for (int s = 1; s <= s_max; ++s) {
        for (int p = 1; p <= std::min(p_max, s + 1); ++p) {
            VerificationCase c;
            c.s = s;
            c.p = p;
            c.k = s / p;
            c.r = s % p;
            c.count_enumeration = count_filtered_cores(s, p, FilterMethod::direct, bound);
            c.count_recurrence = count_filtered_cores(s, p, FilterMethod::recurrence, bound);
            c.count_raney = raney(p + 1, c.r + 1, c.k);
            c.rhs_conjecture = conjecture_rhs(s, p);
            const Natural ideal_route =
                count_filtered_cores(s, p, FilterMethod::ideal_property, bound);
            c.agree = c.count_enumeration == c.count_recurrence &&
                      c.count_enumeration == c.count_raney &&
                      c.count_enumeration == c.rhs_conjecture &&
                      c.count_enumeration == ideal_route;
            report.all_agree = report.all_agree && c.agree;
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const VerificationCase& c : report.cases) {
        cases.push_back({{"s", c.s},
                         {"p", c.p},
                         {"k", c.k},
                         {"r", c.r},
                         {"count_enumeration", natural_to_json(c.count_enumeration)},
                         {"count_recurrence", natural_to_json(c.count_recurrence)},
                         {"count_raney", natural_to_json(c.count_raney)},
                         {"rhs_conjecture", natural_to_json(c.rhs_conjecture)},
                         {"agree", c.agree}});
    }
    const nlohmann::json doc{{"cases", cases},
                             {"summary", {{"all_agree", report.all_agree}}}};
    return doc.dump(2);
}

OracleReport verify_oracles(int limit) {
    detail::check_arg(limit >= 2, "verify_oracles: limit must be at least 2");
    OracleReport report;
    for (int s = 1; s < limit; ++s) {
        for (int t = s + 1; t <= limit; ++t) {
            if (std::gcd(s, t) != 1) continue;
            OracleCase c;
            c.s = s;
            c.t = t;
            c.core_count = count_order_ideals(CorePoset(s, t));
            c.core_count_formula = binomial(s + t, s);
            detail::require(c.core_count_formula % (s + t) == 0,
                            "verify_oracles: s+t must divide C(s+t,s)");
            c.core_count_formula /= s + t;

            const MaxCoreSize max = max_core_size(s, t, std::max(s, t));
            c.max_size = max.max_size;
            c.max_size_witnesses = max.witness_count;
            const Natural numerator =
                Natural(static_cast<long long>(s) * s - 1) * (static_cast<long long>(t) * t - 1);
            detail::require(numerator % 24 == 0, "verify_oracles: 24 must divide (s^2-1)(t^2-1)");
            c.max_size_formula = numerator / 24;

            c.self_conjugate_count = count_self_conjugate_cores(s, t, std::max(s, t));
            c.self_conjugate_formula = binomial(s / 2 + t / 2, s / 2);

            c.agree = c.core_count == c.core_count_formula &&
                      c.max_size == c.max_size_formula && c.max_size_witnesses == 1 &&
                      c.self_conjugate_count == c.self_conjugate_formula;
            report.all_agree = report.all_agree && c.agree;
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

std::string oracle_report_to_json(const OracleReport& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const OracleCase& c : report.cases) {
        cases.push_back({{"s", c.s},
                         {"t", c.t},
                         {"core_count", natural_to_json(c.core_count)},
                         {"core_count_formula", natural_to_json(c.core_count_formula)},
                         {"max_size", natural_to_json(c.max_size)},
                         {"max_size_formula", natural_to_json(c.max_size_formula)},
                         {"max_size_witnesses", c.max_size_witnesses},
                         {"self_conjugate_count", natural_to_json(c.self_conjugate_count)},
                         {"self_conjugate_formula", natural_to_json(c.self_conjugate_formula)},
                         {"agree", c.agree}});
    }
    const nlohmann::json doc{{"cases", cases},
                             {"summary", {{"all_agree", report.all_agree}}}};
    return doc.dump(2);
}

}  // namespace raneycore
