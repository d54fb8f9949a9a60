#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "raneycore/natural.hpp"

namespace raneycore {

// Default ceiling for enumeration-backed counting; T_12 has 208012 ideals.
inline constexpr int kDefaultEnumerationBound = 12;

// Raised when an enumeration-backed method is asked to run past its bound.
class EnumerationBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FilterMethod { direct, ideal_property, recurrence };

// (s+1 - p*floor(s/p))/(s+1) * C(s + floor(s/p), s), evaluated exactly;
// equals raney(p+1, r+1, k) where s = kp + r with 0 <= r < p.
Natural conjecture_rhs(int s, int p);

// Number of (s,s+1)-cores with all parts divisible by p, by one of three
// routes: direct filtering of the enumerated cores, counting T_s ideals whose
// runs have length divisible by p, or the C_{p,r}(k) recurrence.  The two
// enumeration routes require s <= bound.
Natural count_filtered_cores(int s, int p, FilterMethod method,
                             int bound = kDefaultEnumerationBound);

struct MaxCoreSize {
    Natural max_size;
    int witness_count = 0;
};

// Largest size over all (s,t)-cores and how many cores attain it.
MaxCoreSize max_core_size(int s, int t, int bound = kDefaultEnumerationBound);

// Number of (s,t)-cores equal to their own conjugate.
Natural count_self_conjugate_cores(int s, int t, int bound = kDefaultEnumerationBound);

struct VerificationCase {
    int s = 0;
    int p = 0;
    int k = 0;  // s = kp + r with 0 <= r < p
    int r = 0;
    Natural count_enumeration;  // direct filtered count
    Natural count_recurrence;   // C_{p,r}(k)
    Natural count_raney;        // raney(p+1, r+1, k)
    Natural rhs_conjecture;     // closed-form expression
    bool agree = false;
};

struct VerificationReport {
    std::vector<VerificationCase> cases;  // ordered by (s, p)
    bool all_agree = true;
};

// Cross-checks every s in [1, s_max], p in [1, min(p_max, s+1)].
// Disagreements are recorded in the report, never thrown.
VerificationReport verify_main_theorem(int s_max, int p_max,
                                       int bound = kDefaultEnumerationBound);

std::string report_to_json(const VerificationReport& report);

// Checks of the three cited counting results for coprime s < t <= limit:
// total core count, unique maximum-size core, self-conjugate core count.
struct OracleCase {
    int s = 0;
    int t = 0;
    Natural core_count;
    Natural core_count_formula;  // C(s+t, s)/(s+t)
    Natural max_size;
    Natural max_size_formula;    // (s^2-1)(t^2-1)/24
    int max_size_witnesses = 0;
    Natural self_conjugate_count;
    Natural self_conjugate_formula;  // C(fl(s/2)+fl(t/2), fl(s/2))
    bool agree = false;
};

struct OracleReport {
    std::vector<OracleCase> cases;  // ordered by (s, t)
    bool all_agree = true;
};

OracleReport verify_oracles(int limit = 9);

std::string oracle_report_to_json(const OracleReport& report);

}  // namespace raneycore
